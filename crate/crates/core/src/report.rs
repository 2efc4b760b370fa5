//! Runs selected counters on one graph and serializes the results.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde_json::{json, Map, Value as Json};

use crate::catalog::{self, MotifResult, MotifValues, Rooting};
use crate::census::{self, CensusReport, WALK_CORRECTIONS};
use crate::error::{Error, Result};
use crate::eval::Evaluator;
use crate::graph::Graph;
use crate::kappa::{self, TupleMatrix};
use crate::oracle::{self, OracleConfig};
use crate::pattern::RootedGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counter {
    Order3,
    Order4,
    Order5,
    K6,
    Cycles,
    Generic(PathBuf),
}

impl FromStr for Counter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Counter> {
        Ok(match s {
            "order3" => Counter::Order3,
            "order4" => Counter::Order4,
            "order5" => Counter::Order5,
            "k6" => Counter::K6,
            "cycles" => Counter::Cycles,
            _ => match s.strip_prefix("generic:") {
                Some(path) if !path.is_empty() => Counter::Generic(PathBuf::from(path)),
                _ => return Err(Error::Invalid(format!("unknown counter `{s}`"))),
            },
        })
    }
}

impl fmt::Display for Counter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counter::Order3 => f.write_str("order3"),
            Counter::Order4 => f.write_str("order4"),
            Counter::Order5 => f.write_str("order5"),
            Counter::K6 => f.write_str("k6"),
            Counter::Cycles => f.write_str("cycles"),
            Counter::Generic(p) => write!(f, "generic:{}", p.display()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub input: PathBuf,
    pub counters: Vec<Counter>,
    pub format: Format,
    pub oracle_check: bool,
    /// Largest host graph the oracle check runs on.
    pub max_oracle_n: usize,
    /// Include wall times in the report. Off by default so that reports are
    /// byte-identical across runs.
    pub timings: bool,
}

/// Results of one counter.
#[derive(Debug, Clone)]
pub enum Section {
    /// Each result with the rooted pattern it counts.
    Motifs(Vec<(MotifResult, RootedGraph)>),
    Cycles(CensusReport),
    Tuples {
        pattern: RootedGraph,
        values: TupleMatrix,
    },
}

#[derive(Debug, Clone)]
pub struct Report {
    pub n: usize,
    pub m: usize,
    pub l: usize,
    pub peak_nnz: usize,
    pub sections: Vec<(Counter, Section)>,
    pub stages: Vec<(String, Duration)>,
    /// `Some(true)` when every section was checked against the oracle.
    pub verified: Option<bool>,
    edge_keys: Vec<String>,
    vertex_keys: Vec<String>,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn oracle_config(max_vertices: usize) -> OracleConfig {
    OracleConfig {
        max_vertices,
        max_pattern_order: 9,
    }
}

/// Loads the input and evaluates every counter in order.
pub fn run(config: &RunConfig) -> Result<Report> {
    if config.counters.is_empty() {
        return Err(Error::Invalid("no counters selected".into()));
    }
    let mut stages = Vec::new();
    let t = Instant::now();
    let g = Graph::parse_edge_list(&read(&config.input)?)?;
    stages.push(("load".to_string(), t.elapsed()));
    let mut ev = Evaluator::new(&g);
    let check = config.oracle_check && g.n() <= config.max_oracle_n;
    let mut sections = Vec::new();
    for counter in &config.counters {
        let t = Instant::now();
        let section = eval_counter(&mut ev, counter)?;
        stages.push((counter.to_string(), t.elapsed()));
        if check {
            let t = Instant::now();
            verify(&g, &section, &oracle_config(config.max_oracle_n))?;
            stages.push((format!("{counter} oracle"), t.elapsed()));
        }
        sections.push((counter.clone(), section));
    }
    let idx = ev.index();
    let edge_keys = (0..idx.len())
        .map(|e| {
            let (u, v) = idx.endpoints(e);
            format!("{}->{}", g.label(u), g.label(v))
        })
        .collect();
    Ok(Report {
        n: g.n(),
        m: g.m(),
        l: ev.b().nnz(),
        peak_nnz: ev.stats().peak_nnz,
        sections,
        stages,
        verified: config.oracle_check.then_some(check),
        edge_keys,
        vertex_keys: g.labels().to_vec(),
    })
}

fn with_patterns(results: Vec<MotifResult>, order: usize) -> Section {
    Section::Motifs(
        results
            .into_iter()
            .zip(catalog::entries(order).map(|e| e.pattern()))
            .collect(),
    )
}

fn k6_pattern() -> RootedGraph {
    let edges: Vec<(usize, usize)> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
    RootedGraph::edge_rooted(6, &edges, 0, 1).expect("K6 is simple")
}

fn eval_counter(ev: &mut Evaluator<'_>, counter: &Counter) -> Result<Section> {
    Ok(match counter {
        Counter::Order3 => with_patterns(catalog::eval_order3(ev)?, 3),
        Counter::Order4 => with_patterns(catalog::eval_order4(ev)?, 4),
        Counter::Order5 => with_patterns(catalog::eval_order5(ev)?, 5),
        Counter::K6 => Section::Motifs(vec![(catalog::eval_k6_edge(ev)?, k6_pattern())]),
        Counter::Cycles => Section::Cycles(census::census(ev)?),
        Counter::Generic(path) => {
            let pattern = RootedGraph::parse(&read(path)?)?;
            if pattern.order() == 6 && pattern.r.len() == 2 && pattern.s.is_empty() {
                Section::Motifs(vec![(catalog::eval_order6_edge(ev.graph(), &pattern)?, pattern)])
            } else {
                let values = kappa::eval_formula(&kappa::build_formula(&pattern)?, ev.graph())?;
                Section::Tuples { pattern, values }
            }
        }
    })
}

fn mismatch(formula: impl fmt::Display, detail: String) -> Error {
    Error::OracleMismatch {
        formula: formula.to_string(),
        detail,
    }
}

fn check_values(id: impl fmt::Display, got: &[i64], want: &[i64]) -> Result<()> {
    match got.iter().zip(want).position(|(a, b)| a != b) {
        None => Ok(()),
        Some(i) => Err(mismatch(
            id,
            format!("location {i}: formula {} vs oracle {}", got[i], want[i]),
        )),
    }
}

fn verify(g: &Graph, section: &Section, cfg: &OracleConfig) -> Result<()> {
    let idx = g.directed_index();
    match section {
        Section::Motifs(results) => {
            for (r, pattern) in results {
                let want = match r.motif.rooting {
                    Rooting::Edge => oracle::edge_rooted_counts(pattern, g, &idx, cfg)?.into_vec(),
                    Rooting::Vertex => oracle::vertex_rooted_counts(pattern, g, cfg)?.into_vec(),
                };
                check_values(&r.motif, r.values.as_slice(), &want)?;
            }
        }
        Section::Cycles(report) => {
            for (f, &(id, got)) in WALK_CORRECTIONS.iter().zip(&report.f_counts) {
                let p = RootedGraph::new(f.shape_graph(), Vec::new(), Vec::new())?;
                let want = oracle::total_copies(&p, g, cfg)? as i64;
                check_values(id, &[got], &[want])?;
            }
            for &(id, got) in &report.cycle_counts {
                let k = id[1..].parse().expect("cycle ids are C<k>");
                let want = oracle::count_simple_cycles(g, k, cfg)? as i64;
                check_values(id, &[got], &[want])?;
            }
        }
        Section::Tuples { pattern, values } => {
            let want = kappa::kappa_direct(pattern, g)?;
            check_values("generic", values.data(), want.data())?;
        }
    }
    Ok(())
}

impl Report {
    fn tuple_key(&self, r: &[usize], s: &[usize]) -> String {
        let join = |t: &[usize]| {
            t.iter()
                .map(|&v| self.vertex_keys[v].as_str())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!("{}|{}", join(r), join(s))
    }

    fn location_map(&self, values: &MotifValues) -> Map<String, Json> {
        let keys = match values {
            MotifValues::Edge(_) => &self.edge_keys,
            MotifValues::Vertex(_) => &self.vertex_keys,
        };
        keys.iter()
            .cloned()
            .zip(values.as_slice().iter().map(|&x| json!(x)))
            .collect()
    }

    pub fn to_json(&self, timings: bool) -> Json {
        let mut meta = Map::new();
        meta.insert("n".into(), json!(self.n));
        meta.insert("m".into(), json!(self.m));
        meta.insert("l".into(), json!(self.l));
        meta.insert("peak_nnz".into(), json!(self.peak_nnz));
        if timings {
            let stages: Map<String, Json> = self
                .stages
                .iter()
                .map(|(name, d)| (format!("{name}_us"), json!(d.as_micros() as u64)))
                .collect();
            meta.insert("stages".into(), Json::Object(stages));
        }
        let mut out = Map::new();
        out.insert("metadata".into(), Json::Object(meta));
        if let Some(v) = self.verified {
            out.insert("verified".into(), json!(v));
        }
        for (counter, section) in &self.sections {
            out.insert(counter.to_string(), self.section_json(section));
        }
        Json::Object(out)
    }

    fn section_json(&self, section: &Section) -> Json {
        match section {
            Section::Motifs(results) => {
                let mut edge = Map::new();
                let mut vertex = Map::new();
                let mut totals = Map::new();
                for (r, _) in results {
                    let target = match r.motif.rooting {
                        Rooting::Edge => &mut edge,
                        Rooting::Vertex => &mut vertex,
                    };
                    target.insert(r.motif.family.clone(), Json::Object(self.location_map(&r.values)));
                    totals.insert(r.motif.to_string(), json!(r.total));
                }
                json!({ "edge": edge, "vertex": vertex, "totals": totals })
            }
            Section::Cycles(report) => {
                let mut m: Map<String, Json> = report
                    .cycle_counts
                    .iter()
                    .map(|&(id, x)| (id.into(), json!(x)))
                    .collect();
                let f: Map<String, Json> = report.f_counts.iter().map(|&(id, x)| (id.into(), json!(x))).collect();
                m.insert("corrections".into(), Json::Object(f));
                Json::Object(m)
            }
            Section::Tuples { pattern, values } => {
                let cells: Map<String, Json> = values
                    .nonzeros()
                    .map(|(i, j, x)| (self.tuple_key(&i, &j), json!(x)))
                    .collect();
                let total: i64 = values.data().iter().sum();
                json!({
                    "r": pattern.r,
                    "s": pattern.s,
                    "values": cells,
                    "total": total,
                })
            }
        }
    }

    /// One row per directed edge, then per vertex, then per tuple cell, and a
    /// trailing `__total__` row. Cycle counts only appear in the total row.
    pub fn to_csv(&self) -> Result<String> {
        let mut columns: Vec<String> = Vec::new();
        let mut edge_cols: Vec<(usize, &[i64])> = Vec::new();
        let mut vertex_cols: Vec<(usize, &[i64])> = Vec::new();
        let mut tuple_cols: Vec<(usize, &Section)> = Vec::new();
        let mut totals: Vec<i64> = Vec::new();
        for (counter, section) in &self.sections {
            match section {
                Section::Motifs(results) => {
                    for (r, _) in results {
                        let col = columns.len();
                        match r.motif.rooting {
                            Rooting::Edge => {
                                columns.push(format!("e:{}", r.motif.family));
                                edge_cols.push((col, r.values.as_slice()));
                            }
                            Rooting::Vertex => {
                                columns.push(format!("v:{}", r.motif.family));
                                vertex_cols.push((col, r.values.as_slice()));
                            }
                        }
                        totals.push(r.total);
                    }
                }
                Section::Cycles(report) => {
                    for &(id, x) in report.f_counts.iter().chain(&report.cycle_counts) {
                        columns.push(id.to_string());
                        totals.push(x);
                    }
                }
                Section::Tuples { values, .. } => {
                    tuple_cols.push((columns.len(), section));
                    columns.push(counter.to_string());
                    totals.push(values.data().iter().sum());
                }
            }
        }
        let width = columns.len();
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Io {
            path: "csv".into(),
            message: e.to_string(),
        };
        w.write_record(std::iter::once("location".to_string()).chain(columns.iter().cloned()))
            .map_err(csv_err)?;
        let mut emit = |key: String, cols: &[(usize, i64)]| -> Result<()> {
            let mut row = vec![String::new(); width + 1];
            row[0] = key;
            for &(c, x) in cols {
                row[c + 1] = x.to_string();
            }
            w.write_record(&row).map_err(csv_err)
        };
        if !edge_cols.is_empty() {
            for (e, key) in self.edge_keys.iter().enumerate() {
                let cells: Vec<(usize, i64)> = edge_cols.iter().map(|&(c, v)| (c, v[e])).collect();
                emit(key.clone(), &cells)?;
            }
        }
        if !vertex_cols.is_empty() {
            for (v, key) in self.vertex_keys.iter().enumerate() {
                let cells: Vec<(usize, i64)> = vertex_cols.iter().map(|&(c, x)| (c, x[v])).collect();
                emit(key.clone(), &cells)?;
            }
        }
        for &(c, section) in &tuple_cols {
            if let Section::Tuples { values, .. } = section {
                for (i, j, x) in values.nonzeros() {
                    emit(self.tuple_key(&i, &j), &[(c, x)])?;
                }
            }
        }
        let total_cells: Vec<(usize, i64)> = totals.into_iter().enumerate().collect();
        emit("__total__".into(), &total_cells)?;
        let bytes = w.into_inner().map_err(|e| Error::Io {
            path: "csv".into(),
            message: e.to_string(),
        })?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    /// Serialized report in the configured format, newline-terminated.
    pub fn render(&self, config: &RunConfig) -> Result<String> {
        match config.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json(config.timings)).expect("report serializes");
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self.to_csv(),
        }
    }
}
