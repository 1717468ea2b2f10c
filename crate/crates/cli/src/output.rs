use hairycalc::engine::{HomologyTable, Record};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::JobConfig;

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn block_meta(cfg: &JobConfig, table: &HomologyTable, total_ms: u128) -> Value {
    let params = table.params.clone();
    json!({
        "codimension": params.codimension(),
        "below_theorem_range": table.below_theorem_range,
        "workers": cfg.workers,
        "wall_time_ms": total_ms,
        "blocks": table.blocks.iter().map(|b| json!({
            "block": b.key.slug(),
            "basis_size": b.basis_size,
            "euler": b.homology.euler,
            "wall_time_ms": b.wall_time_ms,
        })).collect::<Vec<_>>(),
    })
}

pub fn homology_json(cfg: &JobConfig, table: &HomologyTable, total_ms: u128) -> String {
    let doc = json!({
        "params": cfg,
        "records": table.records(),
        "meta": block_meta(cfg, table, total_ms),
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("json values always serialize");
    s.push('\n');
    s
}

pub fn records_csv(records: &[Record]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "complex",
        "s",
        "t",
        "degree",
        "chain_dim",
        "rank_in",
        "rank_out",
        "homology_dim",
        "zero_generators_discarded",
    ])
    .expect("writing to memory");
    for r in records {
        w.write_record([
            r.complex.name().to_string(),
            join(&r.s, ";"),
            r.t.to_string(),
            r.degree.to_string(),
            r.chain_dim.to_string(),
            r.rank_in.to_string(),
            r.rank_out.to_string(),
            r.homology_dim.to_string(),
            r.zero_generators_discarded.to_string(),
        ])
        .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}

#[derive(Serialize)]
pub struct CheckRow {
    pub check: &'static str,
    pub status: crate::check::Status,
    pub items: usize,
    pub failures: String,
}

/// Generic rows for the oracle tables.
pub fn rows_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}
