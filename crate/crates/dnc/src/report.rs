//! JSON reports. Keys are emitted in sorted order and polynomials in their
//! degrevlex rendering, so identical inputs give identical bytes.

use dnc_core::dgalg::{HomologyTable, Pi0Presentation, SemifreeCDGA};
use dnc_core::polycore::{Ideal, Polynomial};
use serde_json::{json, Value};

use crate::problem::ProblemSpec;

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub result: Value,
    /// `None` for commands that only compute.
    pub verdict: Option<bool>,
    pub timing_ms: u128,
}

impl Report {
    pub fn to_value(&self, with_timing: bool) -> Value {
        let mut v = json!({
            "command": self.command,
            "input": self.input,
            "result": self.result,
            "verdict": self.verdict,
        });
        if with_timing {
            v["timing_ms"] = json!(self.timing_ms as u64);
        }
        v
    }

    /// Pretty JSON with a trailing newline.
    pub fn render(&self, with_timing: bool) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value(with_timing)).expect("json values serialize");
        s.push('\n');
        s
    }

    pub fn exit_code(&self) -> i32 {
        if self.verdict == Some(false) {
            2
        } else {
            0
        }
    }
}

pub fn input_echo(spec: &ProblemSpec) -> Value {
    let center = spec.center_presentation();
    json!({
        "ring": spec.vars,
        "center": polys(center.gens()),
        "cutoff": spec.cutoff,
        "weight": spec.weights.map(|(a, b)| vec![a, b]),
        "hdeg": spec.hdegs.map(|(a, b)| vec![a, b]),
        "pullback": polys(&spec.pullback_relations()),
    })
}

pub fn polys(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

pub fn presentation(a: &SemifreeCDGA) -> Value {
    let gens: Vec<Value> = a
        .gens()
        .iter()
        .map(|g| {
            json!({
                "name": g.name,
                "hdeg": g.hdeg,
                "weight": g.weight,
                "deg": a.deg_of(&g.name),
                "d": a.diff_of(&g.name).map(|p| p.to_string()),
            })
        })
        .collect();
    json!({ "base": a.base().names(), "generators": gens })
}

pub fn pi0(p: &Pi0Presentation) -> Value {
    json!({ "ring": p.ring().names(), "basis": p.basis_strings() })
}

pub fn ideal(i: &Ideal) -> Value {
    json!({ "ring": i.ring().names(), "basis": polys(&i.reduced_basis()) })
}

/// Nonzero entries `[hdeg, weight, deg, dim]` inside the certified band.
pub fn homology(t: &HomologyTable) -> Value {
    let nonzero: Vec<Value> = t
        .certified()
        .filter(|(_, n)| *n > 0)
        .map(|((k, w, d), n)| json!([k, w, d, n]))
        .collect();
    json!({
        "cutoff": t.cutoff,
        "certified_band": t.certified_band,
        "homogenized": t.homogenized,
        "hdeg": [t.hdeg_range.0, t.hdeg_range.1],
        "weight": [t.weight_range.0, t.weight_range.1],
        "nonzero": nonzero,
    })
}
