//! Catalog entries as declarative data.
//!
//! `printed` is the formula as transcribed; `corrected` replaces it where
//! the transcribed form does not count its motif. `shape` and `root` give
//! the rooted pattern the entry counts, as established against the
//! embedding oracle. Roots are vertices `0, 1` for edge-rooted entries and
//! `0` for vertex-rooted ones.

use super::{edge, vertex, Entry};

#[rustfmt::skip]
pub const ENTRIES: &[Entry] = &[
    edge(3, "P3", "rowsum(B)", None, &[(0, 1), (1, 2)]),
    edge(3, "P3_21", "under(P3)", None, &[(0, 1), (0, 2)]),
    edge(3, "C3", "rowsum(Btri)", None, &[(0, 1), (0, 2), (1, 2)]),
    vertex(3, "P3", "gamma(P3)", None, &[(0, 1), (1, 2)]),
    vertex(3, "P3_2", "gamma(P3_21) / 2", None, &[(0, 1), (0, 2)]),
    vertex(3, "C3", "gamma(C3) / 2", None, &[(0, 1), (0, 2), (1, 2)]),
    edge(4, "X11", "rowsum(Bsq)", None, &[(0, 1), (0, 3), (1, 2), (2, 3)]),
    edge(4, "X21", "rowsum(Bcap)", None, &[(0, 1), (1, 2), (2, 3)]),
    edge(4, "X22", "under(X21)", None, &[(0, 1), (0, 2), (2, 3)]),
    edge(4, "X23", "rowsum(B) * colsum(B) - rowsum(Btri)", None, &[(0, 1), (0, 3), (1, 2)]),
    edge(4, "X31", "binom(rowsum(B), 2)", None, &[(0, 1), (1, 2), (1, 3)]),
    edge(4, "X32", "under(X31)", None, &[(0, 1), (0, 2), (0, 3)]),
    edge(4, "X41", "rowsum(Barr) / 2", None, &[(0, 1), (1, 2), (1, 3), (2, 3)]),
    edge(4, "X42", "under(X41)", None, &[(0, 1), (0, 2), (0, 3), (2, 3)]),
    edge(4, "X43", "colsum(Barr)", None, &[(0, 1), (0, 2), (1, 2), (2, 3)]),
    edge(4, "X44", "rowsum(Btri) * (rowsum(B) - 1)", None, &[(0, 1), (0, 2), (1, 2), (1, 3)]),
    edge(4, "X45", "under(X45)", Some("under(X44)"), &[(0, 1), (0, 2), (0, 3), (1, 2)]),
    edge(4, "X51", "binom(rowsum(Btri), 2)", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    edge(4, "X52", "rowsum(Bsq * over(B^2))", None, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    edge(4, "X53", "under(X52)", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]),
    edge(4, "X61", "rowsum(Bx) / 2", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    vertex(4, "X11", "gamma(X11) / 2", None, &[(0, 2), (0, 3), (1, 2), (1, 3)]),
    vertex(4, "X21", "gamma(X21)", None, &[(0, 2), (1, 2), (1, 3)]),
    vertex(4, "X22", "gamma(X22)", None, &[(0, 1), (0, 3), (1, 2)]),
    vertex(4, "X31", "gamma(X31) / 3", Some("gamma(X32) / 3"), &[(0, 1), (0, 2), (0, 3)]),
    vertex(4, "X32", "gamma(X32)", Some("gamma(X31)"), &[(0, 1), (1, 2), (1, 3)]),
    vertex(4, "X41", "gamma(X41)", None, &[(0, 1), (1, 2), (1, 3), (2, 3)]),
    vertex(4, "X42", "gamma(X42)", None, &[(0, 1), (0, 2), (0, 3), (1, 2)]),
    vertex(4, "X43", "gamma(X43)", None, &[(0, 1), (0, 2), (1, 2), (1, 3)]),
    vertex(4, "X51", "gamma(X51)", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    vertex(4, "X52", "gamma(X52) / 2", None, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    vertex(4, "X61", "gamma(X61) / 3", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    edge(5, "X011", "binom(under(rowsum(B)), 3)", None, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
    edge(5, "X012", "under(X011)", None, &[(0, 1), (1, 2), (1, 3), (1, 4)]),
    edge(5, "X021", "rowsum(Bcap) * (rowsum(B) - 1) - rowsum(Barr)", None, &[(0, 1), (1, 2), (1, 4), (2, 3)]),
    edge(5, "X022", "under(X021)", None, &[(0, 1), (0, 2), (0, 4), (2, 3)]),
    edge(5, "X023", "binom(rowsum(B), 2) * under(rowsum(B)) - rowsum(Btri) * (rowsum(B) - 1)", None, &[(0, 1), (0, 4), (1, 2), (1, 3)]),
    edge(5, "X024", "under(X023)", None, &[(0, 1), (0, 3), (0, 4), (1, 2)]),
    edge(5, "X025", "B @ binom(rowsum(B), 2) - rowsum(Barr)", Some("B @ binom(rowsum(B), 2) - colsum(Barr)"), &[(0, 1), (1, 2), (2, 3), (2, 4)]),
    edge(5, "X026", "under(X025)", None, &[(0, 1), (0, 2), (2, 3), (2, 4)]),
    edge(5, "X031", "rowsum(Bp4)", Some("rowsum(Bp4) - rowsum(Btri)"), &[(0, 1), (1, 3), (2, 3), (2, 4)]),
    edge(5, "X032", "under(X031)", None, &[(0, 1), (0, 3), (2, 3), (2, 4)]),
    edge(5, "X033", "rowsum(Bcap) * under(rowsum(B)) - rowsum(Bsq) - rowsum(Barr)", Some("rowsum(Bcap) * under(rowsum(B)) - rowsum(Bsq) - colsum(Barr)"), &[(0, 1), (0, 4), (1, 2), (2, 3)]),
    edge(5, "X034", "under(X033)", None, &[(0, 1), (0, 2), (1, 4), (2, 3)]),
    edge(5, "X041", "rowsum(Bp4 * over(B^2)) / 2", None, &[(0, 1), (1, 3), (1, 4), (2, 3), (2, 4)]),
    edge(5, "X042", "under(X041)", None, &[(0, 1), (0, 3), (0, 4), (2, 3), (2, 4)]),
    edge(5, "X043", "rowsum(Bsq) * (under(rowsum(B)) - 1) - rowsum(Bsq * under(B^2))", None, &[(0, 1), (0, 3), (0, 4), (1, 2), (2, 3)]),
    edge(5, "X044", "under(X043)", None, &[(0, 1), (0, 3), (1, 2), (1, 4), (2, 3)]),
    edge(5, "X045", "colsum(Bp4 * over(B^2))", None, &[(0, 1), (0, 3), (1, 2), (2, 3), (2, 4)]),
    edge(5, "X046", "under(X045)", None, &[(0, 1), (0, 2), (1, 3), (2, 3), (2, 4)]),
    edge(5, "X051", "colsum(Barr) * (rowsum(B) - 2) / 2", Some("under(rowsum(Barr) * (rowsum(B) - 2)) / 2"), &[(0, 1), (0, 2), (0, 3), (0, 4), (2, 3)]),
    edge(5, "X052", "under(X052)", Some("under(X051)"), &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 3)]),
    edge(5, "X053", "rowsum(Btri) * binom(rowsum(B) - 1, 2)", None, &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 4)]),
    edge(5, "X054", "under(X053)", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]),
    edge(5, "X055", "rowsum(Barr @ under(B) - 2 * Barr) / 2", Some("rowsum(Barr' @ B - 2 * Barr') / 2"), &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4)]),
    edge(5, "X061", "rowsum(B^3 * (B^2)')", None, &[(0, 1), (0, 4), (1, 3), (2, 3), (2, 4)]),
    edge(5, "X071", "rowsum(Bx * Bjoin) / 6", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X081", "rowsum(Bx * (Barr @ B)) / 2", Some("rowsum(Bx * (over(Btri) @ B^2)) / 2"), &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    edge(5, "X082", "colsum(Bx * (Barr @ B)) / 2", Some("colsum(Bx * (over(Btri) @ B^2)) / 2"), &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X083", "under(X082)", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X091", "rowsum(Bx @ Btri - 2 * Bx) / 2", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X092", "rowsum((Bx @ Bsq) * B)", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    edge(5, "X093", "under(X092)", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3), (2, 4)]),
    edge(5, "X094", "rowsum(Bx) * (rowsum(Btri) - 2) / 2", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]),
    edge(5, "X095", "(colsum(Bx @ Btri) - 2 * rowsum(Bx)) / 2", None, &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X096", "under(X095)", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X101", "rowsum(Bsq * Bjoin)", None, &[(0, 1), (0, 2), (0, 4), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X102", "rowsum(binom((Btri @ under(Btri)) * B', 2))", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]),
    edge(5, "X103", "under(X102)", None, &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    edge(5, "X111", "rowsum(Bx) * (under(rowsum(B)) - 2) / 2", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3)]),
    edge(5, "X112", "under(X111)", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3)]),
    edge(5, "X113", "colsum(Bx @ B - 2 * Bx) / 6", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X114", "under(X113)", None, &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X115", "rowsum(Bx @ B) - 2 * colsum(Bx)", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4)]),
    edge(5, "X121", "colsum((B^3 - 1) * (Btri @ under(Btri)) * B')", None, &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3), (2, 4)]),
    edge(5, "X122", "under(X121)", None, &[(0, 1), (0, 2), (0, 3), (1, 3), (1, 4), (2, 3), (2, 4)]),
    edge(5, "X123", "colsum((Bsq @ Btri) * B^2) / 2", None, &[(0, 1), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]),
    edge(5, "X124", "colsum(Bsq * (Barr @ B)) / 2", Some("colsum(Bsq * (over(Btri) @ B^2)) / 2"), &[(0, 1), (0, 3), (0, 4), (1, 2), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X125", "under(X124)", None, &[(0, 1), (0, 4), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X131", "rowsum((Bsq @ Bsq) * B')", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (2, 3), (2, 4)]),
    edge(5, "X132", "under(X131)", None, &[(0, 1), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    edge(5, "X133", "rowsum(Bsq * under(B^2)) * (rowsum(Btri) - 1) - rowsum(Bx)", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3)]),
    edge(5, "X134", "under(X133)", None, &[(0, 1), (0, 2), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]),
    edge(5, "X135", "rowsum((Bsq * under(B^2)) @ Btri - Bsq * under(B^2) - Bx)", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X136", "under(X135)", None, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X137", "rowsum((B^3 * B^2 * B') @ (Btri - 1) - Bx)", Some("rowsum((B^3 * B^2 * B') @ Btri - B^3 * B^2 * B' - Bx)"), &[(0, 1), (0, 2), (0, 4), (1, 2), (1, 3), (2, 3), (2, 4)]),
    edge(5, "X141", "binom(rowsum(Btri), 3)", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    edge(5, "X142", "Btri @ binom(rowsum(Btri) - 1, 2)", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (2, 4)]),
    edge(5, "X143", "under(X142)", None, &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    edge(5, "X151", "colsum((Barr @ Btri) * (1 - B) * (1 - under(B))) / 2", Some("colsum((Barr' @ under(Btri)) * (1 - B) * (1 - under(B))) / 2"), &[(0, 1), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]),
    edge(5, "X152", "under(X151)", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 3)]),
    edge(5, "X153", "rowsum((Barr @ Btri) * (1 - B) * (1 - under(B))) / 2", Some("rowsum((Barr' @ Btri) * (1 - B) * (1 - under(B))) / 2"), &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X161", "colsum((Bsq * over(B^2)) @ under(B) - Bx - Bsq * over(B^2)) / 2", None, &[(0, 1), (0, 2), (0, 3), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X162", "under(X161)", None, &[(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X163", "rowsum(Bsq * under(B^2)) * (rowsum(B) - 1) - rowsum(Bx)", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 3)]),
    edge(5, "X164", "under(X163)", None, &[(0, 1), (0, 2), (0, 4), (1, 2), (1, 3), (2, 3)]),
    edge(5, "X165", "rowsum(((Bsq * over(B^2)) @ under(B)) * (1 - over(B)) - Bx)", None, &[(0, 1), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4)]),
    edge(5, "X166", "under(X165)", None, &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (2, 4)]),
    edge(5, "X167", "(rowsum(Btri) - 1) * rowsum(Barr) - rowsum(Bx)", Some("(rowsum(Btri) - 1) * colsum(Barr) - rowsum(Bx)"), &[(0, 1), (0, 2), (0, 4), (1, 2), (1, 4), (2, 3)]),
    edge(5, "X171", "B @ binom(rowsum(Btri), 2) - rowsum(Bsq * over(B^2))", None, &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    edge(5, "X172", "under(X171)", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (2, 3), (2, 4)]),
    edge(5, "X173", "rowsum(Bsq * over(B^2)) * (rowsum(B) - 2)", None, &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3)]),
    edge(5, "X174", "under(X173)", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3)]),
    edge(5, "X175", "rowsum(((Bsq * over(B^2)) @ B) * (1 - over(B)) * (1 - B'))", None, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4)]),
    edge(5, "X176", "under(X175)", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (2, 4)]),
    edge(5, "X177", "binom(rowsum(Btri), 2) * (rowsum(B) - 2)", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 4)]),
    edge(5, "X178", "under(X177)", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3)]),
    edge(5, "X181", "rowsum((Btri @ Bsq) * (1 - over(B)) * (1 - B))", None, &[(0, 1), (0, 3), (0, 4), (1, 3), (2, 3), (2, 4)]),
    edge(5, "X182", "under(X181)", None, &[(0, 1), (0, 3), (1, 3), (1, 4), (2, 3), (2, 4)]),
    edge(5, "X183", "rowsum(((B^3 * B') @ Btri) * (1 - B) - Bsq * under(B^2))", None, &[(0, 1), (0, 2), (0, 4), (1, 3), (2, 3), (2, 4)]),
    edge(5, "X184", "under(X183)", None, &[(0, 1), (0, 4), (1, 2), (1, 3), (2, 3), (2, 4)]),
    edge(5, "X185", "colsum((Btri @ Bsq) * (1 - over(B)) * (1 - B))", None, &[(0, 1), (0, 3), (1, 2), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X186", "rowsum(Btri) * rowsum(Bsq) - rowsum(Bsq * (over(B^2) + under(B^2)))", None, &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3)]),
    edge(5, "X191", "colsum(binom(B^3 * B', 2))", None, &[(0, 1), (0, 3), (0, 4), (1, 2), (2, 3), (2, 4)]),
    edge(5, "X192", "under(X191)", None, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    edge(5, "X201", "colsum((Barr @ B) * (1 - B) * (1 - under(B)) * (1 - over(B)) * (1 - B')) / 2", Some("colsum((over(Barr') @ B) * (1 - B) * (1 - under(B)) * (1 - over(B)) * (1 - B')) / 2"), &[(0, 1), (0, 2), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X202", "under(X201)", None, &[(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)]),
    edge(5, "X203", "colsum(Barr) * (rowsum(B) / 2) - rowsum(Bsq * under(B^2))", Some("colsum(Barr) * (rowsum(B) - 1) - rowsum(Bsq * over(B^2))"), &[(0, 1), (0, 2), (1, 2), (1, 4), (2, 3)]),
    edge(5, "X204", "under(X203)", None, &[(0, 1), (0, 2), (0, 4), (1, 2), (2, 3)]),
    edge(5, "X205", "rowsum(Btri) * rowsum(Bcap) - rowsum(Barr - Bsq * over(B^2))", Some("rowsum(Btri) * rowsum(Bcap) - colsum(Barr) - colsum(Bsq * over(B^2))"), &[(0, 1), (0, 4), (1, 2), (1, 4), (2, 3)]),
    edge(5, "X206", "under(X205)", None, &[(0, 1), (0, 2), (0, 4), (1, 4), (2, 3)]),
    edge(5, "X207", "rowsum((Barr @ B) * (1 - B) * (1 - under(B)) * (1 - over(B)) * (1 - B'))", None, &[(0, 1), (1, 2), (1, 3), (2, 3), (2, 4)]),
    vertex(5, "X011", "gamma(X011) / 4", None, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
    vertex(5, "X012", "gamma(X012)", None, &[(0, 1), (1, 2), (1, 3), (1, 4)]),
    vertex(5, "X021", "gamma(X022) / 2", None, &[(0, 1), (0, 3), (0, 4), (1, 2)]),
    vertex(5, "X022", "gamma(X021)", None, &[(0, 1), (1, 2), (1, 4), (2, 3)]),
    vertex(5, "X023", "gamma(X023)", None, &[(0, 1), (0, 4), (1, 2), (1, 3)]),
    vertex(5, "X024", "gamma(X025)", None, &[(0, 2), (1, 2), (1, 3), (1, 4)]),
    vertex(5, "X031", "gamma(X031)", None, &[(0, 3), (1, 2), (1, 4), (2, 3)]),
    vertex(5, "X032", "gamma(X032)", None, &[(0, 2), (0, 4), (1, 2), (1, 3)]),
    vertex(5, "X033", "gamma(X034) / 2", None, &[(0, 1), (0, 2), (1, 4), (2, 3)]),
    vertex(5, "X041", "gamma(X041)", None, &[(0, 1), (1, 3), (1, 4), (2, 3), (2, 4)]),
    vertex(5, "X042", "gamma(X043) / 2", None, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3)]),
    vertex(5, "X043", "gamma(X044)", None, &[(0, 1), (0, 3), (1, 2), (1, 4), (2, 3)]),
    vertex(5, "X044", "gamma(X045) / 2", None, &[(0, 2), (0, 3), (1, 2), (1, 3), (1, 4)]),
    vertex(5, "X051", "gamma(X052)", None, &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 3)]),
    vertex(5, "X052", "gamma(X051) / 2", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]),
    vertex(5, "X053", "gamma(X053)", None, &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 4)]),
    vertex(5, "X061", "gamma(X061) / 2", None, &[(0, 3), (0, 4), (1, 2), (1, 4), (2, 3)]),
    vertex(5, "X071", "gamma(X071) / 4", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    vertex(5, "X081", "gamma(X081) / 2", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    vertex(5, "X082", "gamma(X083) / 3", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    vertex(5, "X091", "gamma(X091)", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    vertex(5, "X092", "gamma(X096)", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]),
    vertex(5, "X093", "gamma(X095) / 2", None, &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    vertex(5, "X101", "gamma(X101) / 2", None, &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    vertex(5, "X102", "gamma(X102) / 4", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]),
    vertex(5, "X111", "gamma(X111) / 3", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3)]),
    vertex(5, "X112", "gamma(X112)", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3)]),
    vertex(5, "X113", "gamma(X114)", None, &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    vertex(5, "X121", "gamma(X121) / 2", None, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]),
    vertex(5, "X122", "gamma(X122) / 2", None, &[(0, 1), (0, 2), (0, 3), (1, 3), (1, 4), (2, 3), (2, 4)]),
    vertex(5, "X123", "gamma(X125) / 2", None, &[(0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    vertex(5, "X131", "gamma(X131) / 2", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3)]),
    vertex(5, "X132", "gamma(X132)", None, &[(0, 1), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    vertex(5, "X133", "gamma(X134)", None, &[(0, 1), (0, 2), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]),
    vertex(5, "X141", "gamma(X141)", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    vertex(5, "X142", "gamma(X143) / 2", None, &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    vertex(5, "X151", "gamma(X151)", None, &[(0, 1), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]),
    vertex(5, "X152", "gamma(X152) / 4", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 3)]),
    vertex(5, "X161", "gamma(X162)", None, &[(0, 3), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    vertex(5, "X162", "gamma(X161)", None, &[(0, 1), (0, 2), (0, 4), (1, 2), (1, 3), (2, 3)]),
    vertex(5, "X163", "gamma(X163)", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 3)]),
    vertex(5, "X164", "gamma(X165) / 2", None, &[(0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3)]),
    vertex(5, "X171", "gamma(X171)", None, &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    vertex(5, "X172", "gamma(X172)", None, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3)]),
    vertex(5, "X173", "gamma(X175)", None, &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3)]),
    vertex(5, "X174", "gamma(X176) / 2", None, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 4)]),
    vertex(5, "X181", "gamma(X182) / 2", None, &[(0, 1), (0, 3), (1, 3), (1, 4), (2, 3), (2, 4)]),
    vertex(5, "X182", "gamma(X181)", None, &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3)]),
    vertex(5, "X183", "gamma(X184)", None, &[(0, 2), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]),
    vertex(5, "X191", "gamma(X191) / 3", None, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    vertex(5, "X192", "gamma(X192) / 2", None, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    vertex(5, "X201", "gamma(X202)", None, &[(0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]),
    vertex(5, "X202", "gamma(X201)", None, &[(0, 1), (0, 4), (1, 2), (1, 3), (2, 3)]),
    vertex(5, "X203", "gamma(X203)", Some("gamma(X203) / 2"), &[(0, 1), (0, 2), (1, 2), (1, 4), (2, 3)]),
    vertex(5, "X204", "gamma(X205)", None, &[(0, 2), (0, 3), (1, 2), (1, 4), (2, 3)]),
];
