//! Report structures shared by the JSON and text renderers.

use std::fmt::Write as _;

use frobgen_core::{ChainReport, Ring};
use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub context: Context,
    pub f: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<Chain>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub operator: Option<Operator>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<Root>,
}

#[derive(Serialize)]
pub struct Context {
    pub p: u32,
    pub vars: Vec<String>,
    pub order: String,
}

impl Context {
    pub fn of(ring: &Ring) -> Self {
        Context { p: ring.p(), vars: ring.vars().to_vec(), order: ring.order().to_string() }
    }
}

#[derive(Serialize)]
pub struct Level {
    pub s: u32,
    pub groebner: Vec<String>,
    pub max_gen_degree: u64,
}

#[derive(Serialize)]
pub struct Chain {
    pub levels: Vec<Level>,
    pub stabilized_at: Option<u32>,
    pub cap: u32,
    pub degree_bound_ok: bool,
}

impl Chain {
    pub fn of(report: &ChainReport) -> Self {
        let levels = report
            .levels
            .iter()
            .map(|l| Level {
                s: l.s,
                groebner: l.ideal.groebner().iter().map(|g| g.to_string()).collect(),
                max_gen_degree: l.ideal.max_generator_degree(),
            })
            .collect();
        Chain { levels, stabilized_at: report.stabilized_at, cap: report.cap, degree_bound_ok: report.degrees_ok }
    }
}

#[derive(Serialize)]
pub struct Operator {
    pub normal_form: String,
    pub level: u32,
    pub verified: bool,
}

#[derive(Serialize)]
pub struct Witness {
    pub expr: String,
    pub target_power: u32,
}

#[derive(Serialize)]
pub struct Coord {
    pub basis: String,
    pub coord: String,
}

#[derive(Serialize)]
pub struct Root {
    pub s: u32,
    pub coords: Vec<Coord>,
    pub groebner: Vec<String>,
}

fn ideal_text(gens: &[String]) -> String {
    if gens.is_empty() {
        "(0)".to_string()
    } else {
        format!("({})", gens.join(", "))
    }
}

impl Report {
    pub fn new(command: &'static str, ring: &Ring, f: String) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            context: Context::of(ring),
            f,
            chain: None,
            operator: None,
            witness: None,
            root: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.context;
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "context: p={} vars={} order={}", c.p, c.vars.join(","), c.order);
        let _ = writeln!(out, "f: {}", self.f);
        if let Some(chain) = &self.chain {
            for l in &chain.levels {
                let _ = writeln!(out, "level {}: {} max_gen_degree={}", l.s, ideal_text(&l.groebner), l.max_gen_degree);
            }
            match chain.stabilized_at {
                Some(s) => {
                    let _ = writeln!(out, "stabilized_at: {s}");
                }
                None => {
                    let _ = writeln!(out, "stabilized_at: none");
                }
            }
            let _ = writeln!(out, "cap: {}", chain.cap);
            let _ = writeln!(out, "degree_bound: {}", if chain.degree_bound_ok { "ok" } else { "violated" });
        }
        if let Some(root) = &self.root {
            let _ = writeln!(out, "s: {}", root.s);
            for c in &root.coords {
                let _ = writeln!(out, "coord {} -> {}", c.basis, c.coord);
            }
            let _ = writeln!(out, "ideal: {}", ideal_text(&root.groebner));
        }
        if let Some(op) = &self.operator {
            let _ = writeln!(out, "operator: {}", op.normal_form);
            let _ = writeln!(out, "operator_level: {}", op.level);
            let _ = writeln!(out, "verified: {}", op.verified);
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "witness: {}", w.expr);
            let _ = writeln!(out, "target_power: {}", w.target_power);
        }
        out
    }
}
