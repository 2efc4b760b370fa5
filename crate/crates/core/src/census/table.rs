//! Walk-correction and cycle formulas as declarative data.
//!
//! `shape` is the subgraph each correction term counts, as established
//! against the closed-walk oracle.

use super::{CycleFormula, WalkCorrection};

#[rustfmt::skip]
pub const WALK_CORRECTIONS: &[WalkCorrection] = &[
    WalkCorrection { id: "F1", printed: "sum(diag(B^3)) / 6", corrected: None, shape: &[(0, 1), (0, 2), (1, 2)] },
    WalkCorrection { id: "F2", printed: "sum(binom(diag(B^3), 2)) / 2", corrected: None, shape: &[(1, 0), (2, 0), (2, 1), (2, 3), (3, 0)] },
    WalkCorrection { id: "F3", printed: "(sum(B * Btrtr) - 12 * F2 - 6 * F1) / 8", corrected: None, shape: &[(1, 0), (1, 2), (1, 3), (1, 4), (2, 3), (4, 0)] },
    WalkCorrection { id: "F4", printed: "(sum(diag(B^3) * diag(B^4)) - 8 * F2) / 2", corrected: None, shape: &[(1, 0), (1, 2), (1, 4), (2, 3), (3, 0), (4, 0)] },
    WalkCorrection { id: "F5", printed: "sum(binom(diag(B^3), 3)) / 2", corrected: None, shape: &[(1, 0), (1, 2), (1, 3), (1, 4), (2, 0), (2, 3), (4, 2)] },
    WalkCorrection { id: "F6", printed: "(sum(B * Bsqtr) - 6 * F4 - 24 * F5 - 16 * F2) / 4", corrected: None, shape: &[(0, 5), (1, 0), (1, 2), (2, 0), (3, 0), (3, 4), (4, 5)] },
    WalkCorrection { id: "F7", printed: "sum(Bx) / 6", corrected: Some("sum(Bx) / 24"), shape: &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] },
    WalkCorrection { id: "F8", printed: "sum(Bsq) / 8", corrected: None, shape: &[(0, 1), (1, 2), (2, 3), (3, 0)] },
    WalkCorrection { id: "F9", printed: "sum(Bsqr * B^3) / 2", corrected: None, shape: &[(1, 0), (1, 2), (2, 0), (3, 1), (3, 2), (3, 4), (4, 1)] },
    WalkCorrection { id: "F10", printed: "sum(Bsqtt) / 12", corrected: None, shape: &[(0, 4), (1, 0), (2, 1), (2, 3), (2, 4), (3, 0)] },
    WalkCorrection { id: "F11", printed: "(sum(binom(diag(B^4), 2)) - 2 * F9 - 12 * F10 - 12 * F7) / 2", corrected: None, shape: &[(0, 4), (1, 0), (2, 1), (2, 3), (3, 0), (3, 5), (4, 5)] },
    WalkCorrection { id: "F12", printed: "sum(Bsq * binom(over(B^3), 2)) / 24", corrected: None, shape: &[(0, 4), (0, 5), (1, 0), (2, 1), (2, 3), (2, 4), (2, 5), (3, 0)] },
    WalkCorrection { id: "F13", printed: "sum(Bsq * binom(B^3, 2)) / 2", corrected: None, shape: &[(0, 5), (1, 0), (2, 1), (3, 0), (3, 2), (3, 4), (3, 5), (4, 0)] },
    WalkCorrection { id: "F14", printed: "(sum(diag(B^3) * diag(B^5)) - 4 * F4 - 2 * F9) / 2", corrected: None, shape: &[(0, 5), (1, 0), (1, 5), (2, 1), (3, 2), (3, 4), (4, 0)] },
    WalkCorrection { id: "F15", printed: "(sum(B * Btrtr) - 8 * F8 - 48 * F10 - 48 * F12 - 12 * F11 - 16 * F13 - 20 * F9 - 72 * F7) / 8", corrected: Some("(sum(B * outer(diag(B^4), diag(B^4))) - 8 * F8 - 48 * F10 - 48 * F12 - 12 * F11 - 16 * F13 - 20 * F9 - 72 * F7) / 8"), shape: &[(1, 0), (2, 1), (3, 0), (3, 2), (3, 4), (3, 6), (4, 5), (5, 6)] },
    WalkCorrection { id: "F16", printed: "(sum((1 - B') * B^2 * Btrtr) - 12 * F2 - 24 * F7 - 16 * F3 - 6 * F9) / 8", corrected: None, shape: &[(1, 0), (1, 2), (2, 0), (3, 0), (3, 4), (3, 5), (4, 5)] },
    WalkCorrection { id: "F17", printed: "(sum(B * outer(diag(B^3), diag(B^5))) - 6 * F14 - 8 * F4 - 10 * F9 - 16 * F13) / 4", corrected: None, shape: &[(0, 1), (0, 5), (0, 6), (2, 1), (3, 2), (3, 4), (4, 0), (6, 5)] },
    WalkCorrection { id: "F18", printed: "sum(Bpnt) / 4", corrected: None, shape: &[(1, 0), (1, 2), (3, 0), (3, 2), (3, 4), (4, 0), (4, 1)] },
    WalkCorrection { id: "F19", printed: "sum(Bpnt * (B^2)') / 4", corrected: None, shape: &[(1, 0), (1, 2), (3, 1), (3, 2), (3, 4), (4, 0), (4, 1), (4, 2)] },
    WalkCorrection { id: "F20", printed: "sum(B^2 * binom((B^3)', 2)) / 2", corrected: None, shape: &[(1, 0), (1, 5), (2, 1), (3, 2), (3, 4), (4, 0), (4, 5)] },
    WalkCorrection { id: "F21", printed: "(sum(Bsqr * Bsqd) - 8 * F2 - 4 * F9 - 24 * F5) / 4", corrected: None, shape: &[(0, 4), (0, 5), (1, 0), (2, 0), (2, 1), (2, 3), (3, 0), (4, 5)] },
    WalkCorrection { id: "F22", printed: "(sum(Bsql * Bsqd) - 48 * F7 - 4 * F9 - 8 * F19) / 4", corrected: None, shape: &[(0, 5), (1, 0), (1, 5), (2, 0), (2, 1), (3, 2), (3, 4), (4, 2)] },
    WalkCorrection { id: "F23", printed: "sum(Bsqr * B^4) - 24 * F7 - 2 * F9 - 4 * F19", corrected: None, shape: &[(1, 0), (1, 2), (3, 2), (3, 4), (4, 1), (4, 2), (4, 5), (5, 0)] },
    WalkCorrection { id: "F24", printed: "(sum(Bsqtt * B^3) - 4 * F18) / 2", corrected: Some("sum(diag(B^3) * rowsum(B * binom((B^3)', 2))) - 6 * F5 - 4 * F18"), shape: &[(1, 0), (1, 2), (1, 5), (2, 0), (3, 2), (3, 4), (3, 5), (4, 1)] },
    WalkCorrection { id: "F25", printed: "(sum(Bsql * B^3 * outer(diag(B^3), 1)) - 2 * F9 - 8 * F19) / 6", corrected: None, shape: &[(1, 0), (2, 0), (2, 1), (2, 5), (3, 0), (3, 2), (3, 4), (3, 5), (4, 0)] },
    WalkCorrection { id: "F26", printed: "(sum(diag(B^3) * diag(B^6)) - 6 * F1 - 20 * F2 - 24 * F3 - 12 * F5 - 48 * F7 - 12 * F9 - 4 * F14 - 8 * F19 - 8 * F21 - 4 * F22 - 2 * F23) / 2", corrected: None, shape: &[(1, 0), (1, 2), (2, 0), (2, 6), (3, 0), (3, 4), (4, 5), (5, 6)] },
    WalkCorrection { id: "F27", printed: "(sum(diag(B^4) * diag(B^5)) - 6 * F4 - 8 * F20 - 8 * F18 - 4 * F19 - 2 * F23 - 4 * F24) / 2", corrected: None, shape: &[(0, 6), (1, 0), (1, 2), (1, 4), (2, 3), (3, 0), (4, 5), (6, 5)] },
    WalkCorrection { id: "F28", printed: "(sum((1 - B') * B^2 * Bsqtr) - 12 * F2 - 8 * F4 - 36 * F5 - 8 * F6 - 24 * F7 - 6 * F9 - 12 * F18 - 4 * F19 - 4 * F21 - 3 * F23 - 4 * F24) / 4", corrected: None, shape: &[(0, 1), (0, 4), (0, 6), (2, 1), (2, 3), (3, 1), (4, 5), (6, 5)] },
    WalkCorrection { id: "F29", printed: "(sum(B * B^4 * under(B^3) * over(B^3)) - 8 * F2 - 16 * F3 - 24 * F5 - 24 * F7 - 14 * F9 - 28 * F21) / 48", corrected: None, shape: &[(1, 0), (2, 0), (2, 1), (2, 5), (2, 6), (3, 2), (3, 4), (4, 2), (6, 5)] },
    WalkCorrection { id: "F30", printed: "(sum(binom(diag(B^3), 2) * diag(B^5)) - 4 * F18 - 8 * F19 - 2 * F23 - 6 * F25) / 2", corrected: None, shape: &[(0, 1), (0, 2), (0, 6), (1, 2), (1, 5), (3, 0), (3, 4), (4, 5), (6, 1)] },
    WalkCorrection { id: "F31", printed: "(sum(binom(diag(B^4), 2) * diag(B^3)) - 12 * F5 - 24 * F7 - 2 * F9 - 8 * F18 - 10 * F19 - 2 * F23 - 2 * F24 - 6 * F25) / 2", corrected: None, shape: &[(0, 5), (1, 0), (2, 1), (3, 0), (3, 2), (3, 4), (3, 6), (4, 0), (6, 5)] },
    WalkCorrection { id: "F32", printed: "(sum(B^2 * B^3 * Btrtr) - 4 * F2 - 12 * F5 - 72 * F7 - 14 * F9 - 24 * F19 - 8 * F21 - 8 * F22 - 24 * F25) / 8", corrected: None, shape: &[(0, 1), (0, 6), (2, 1), (3, 1), (3, 2), (3, 4), (3, 5), (4, 5), (6, 1)] },
    WalkCorrection { id: "F33", printed: "sum((B^2)' * binom(B^3, 3)) / 2", corrected: None, shape: &[(0, 6), (1, 0), (1, 2), (1, 5), (3, 2), (3, 4), (3, 5), (3, 6), (4, 1)] },
    WalkCorrection { id: "F34", printed: "(sum(B * outer(diag(B^3), diag(B^6))) - 6 * F1 - 36 * F2 - 48 * F3 - 36 * F5 - 144 * F7 - 44 * F9 - 8 * F14 - 48 * F19 - 48 * F21 - 16 * F22 - 10 * F23 - 6 * F26 - 48 * F29 - 16 * F30 - 8 * F31 - 16 * F32 - 60 * F25) / 4", corrected: None, shape: &[(1, 0), (1, 6), (1, 7), (2, 1), (3, 2), (3, 4), (4, 5), (5, 6), (7, 0)] },
    WalkCorrection { id: "F35", printed: "(sum(B * outer(diag(B^4), diag(B^5))) - 10 * F4 - 16 * F20 - 24 * F18 - 28 * F19 - 10 * F23 - 20 * F24 - 6 * F27 - 8 * F30 - 16 * F31 - 24 * F33 - 36 * F25) / 4", corrected: None, shape: &[(1, 0), (2, 1), (3, 0), (3, 2), (3, 4), (3, 7), (4, 5), (5, 6), (7, 6)] },
];

#[rustfmt::skip]
pub const CYCLE_FORMULAS: &[CycleFormula] = &[
    CycleFormula { id: "C3", length: 3, formula: "F1" },
    CycleFormula { id: "C4", length: 4, formula: "sum(diag(B^4)) / 8" },
    CycleFormula { id: "C5", length: 5, formula: "sum(diag(B^5)) / 10" },
    CycleFormula { id: "C6", length: 6, formula: "(sum(diag(B^6)) - 6 * F1 - 12 * F2 - 24 * F3) / 12" },
    CycleFormula { id: "C7", length: 7, formula: "(sum(B^6 * B') - 28 * F2 - 14 * F4 - 84 * F5 - 28 * F6) / 14" },
    CycleFormula { id: "C8", length: 8, formula: "(sum(B^6 * (B^2)') - 144 * F7 - 8 * F8 - 16 * F4 - 64 * F9 - 48 * F10 - 16 * F11 - 96 * F12 - 96 * F13 - 16 * F14 - 32 * F15 - 32 * F16 - 32 * F17) / 16" },
    CycleFormula { id: "C9", length: 9, formula: "(sum(B^6 * (B^3)') - 6 * F1 - 36 * F2 - 72 * F3 - 18 * F4 - 36 * F5 - 288 * F7 - 90 * F9 - 18 * F14 - 108 * F18 - 180 * F19 - 36 * F20 - 108 * F21 - 36 * F22 - 72 * F23 - 72 * F24 - 288 * F25 - 18 * F26 - 18 * F27 - 36 * F28 - 144 * F29 - 108 * F30 - 108 * F31 - 72 * F32 - 108 * F33 - 36 * F34 - 36 * F35) / 18" },
];
