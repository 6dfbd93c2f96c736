use std::fmt;
use std::rc::Rc;
use std::str::FromStr;
use std::time::Instant;

use dnc_core::blowup::{
    blowup_charts, chart_homology, check_excessive, exceptional_divisor, transition, verify_deformation_as_blowup,
    ExcessiveSquareData,
};
use dnc_core::center::CenterPresentation;
use dnc_core::classical::classical_normal_cone;
use dnc_core::comparisons::{compare_classical_blowup, compare_classical_deformation};
use dnc_core::dgalg::{homology_table, SemifreeCDGA};
use dnc_core::infnbhd::{consistent_offsets, inf_neighborhood, koszul_model, pi0_ideal_check, check_zeroth, verify_inf_triangles};
use dnc_core::polycore::{with_basis_store, BasisStore, Polynomial, RingMap};
use dnc_core::rees::{
    check_generic_fiber, check_special_fiber, deformation_fiber, normal_cone_model, rees_extended, rees_structure,
    FiberKind,
};
use serde_json::{json, Value};

use crate::problem::ProblemSpec;
use crate::report::{self, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Rees,
    Fiber(FiberKind),
    NormalCone,
    Blowup,
    Exceptional,
    CompareDeformation,
    CompareBlowup,
    /// Neighborhood order n.
    Infnbhd(u32),
    CheckInf,
    CheckExcessive,
    DeformationAsBlowup,
    Homology,
    Pi0,
}

pub const COMMAND_NAMES: [&str; 13] = [
    "rees",
    "fiber",
    "normal-cone",
    "blowup",
    "exceptional",
    "compare-deformation",
    "compare-blowup",
    "infnbhd",
    "check-inf",
    "check-excessive",
    "deformation-as-blowup",
    "homology",
    "pi0",
];

/// Largest neighborhood order checked by `check-inf`.
pub const INF_MAX_LEVEL: u32 = 3;

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Rees => "rees",
            Command::Fiber(_) => "fiber",
            Command::NormalCone => "normal-cone",
            Command::Blowup => "blowup",
            Command::Exceptional => "exceptional",
            Command::CompareDeformation => "compare-deformation",
            Command::CompareBlowup => "compare-blowup",
            Command::Infnbhd(_) => "infnbhd",
            Command::CheckInf => "check-inf",
            Command::CheckExcessive => "check-excessive",
            Command::DeformationAsBlowup => "deformation-as-blowup",
            Command::Homology => "homology",
            Command::Pi0 => "pi0",
        }
    }

    /// Every command with default options.
    pub fn all() -> Vec<Command> {
        COMMAND_NAMES.iter().map(|n| n.parse().expect("known name")).collect()
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Fiber(k) => write!(f, "fiber --at {k}"),
            Command::Infnbhd(n) => write!(f, "infnbhd --level {n}"),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown command `{0}`")]
pub struct UnknownCommand(pub String);

impl FromStr for Command {
    type Err = UnknownCommand;

    /// Bare command names; options take their defaults (`--at generic`, `--level 1`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "rees" => Command::Rees,
            "fiber" => Command::Fiber(FiberKind::Generic),
            "normal-cone" => Command::NormalCone,
            "blowup" => Command::Blowup,
            "exceptional" => Command::Exceptional,
            "compare-deformation" => Command::CompareDeformation,
            "compare-blowup" => Command::CompareBlowup,
            "infnbhd" => Command::Infnbhd(1),
            "check-inf" => Command::CheckInf,
            "check-excessive" => Command::CheckExcessive,
            "deformation-as-blowup" => Command::DeformationAsBlowup,
            "homology" => Command::Homology,
            "pi0" => Command::Pi0,
            other => return Err(UnknownCommand(other.to_string())),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{command} failed")]
pub struct CommandError {
    pub command: String,
    #[source]
    pub source: dnc_core::Error,
}

type Outcome = Result<(Value, Option<bool>), dnc_core::Error>;

pub fn run_command(spec: &ProblemSpec, command: Command) -> Result<Report, CommandError> {
    let start = Instant::now();
    let center = spec.center_presentation();
    let outcome = match command {
        Command::Rees => rees(spec, &center),
        Command::Fiber(kind) => fiber(spec, &center, kind),
        Command::NormalCone => normal_cone(spec, &center),
        Command::Blowup => blowup(spec, &center),
        Command::Exceptional => exceptional(spec, &center),
        Command::CompareDeformation => compare_deformation(&center),
        Command::CompareBlowup => compare_blowup(&center),
        Command::Infnbhd(n) => infnbhd(spec, &center, n),
        Command::CheckInf => check_inf(spec, &center),
        Command::CheckExcessive => excessive(spec, &center),
        Command::DeformationAsBlowup => deformation_as_blowup(&center),
        Command::Homology => homology(spec, &center),
        Command::Pi0 => pi0(&center),
    };
    let (result, verdict) = outcome.map_err(|source| CommandError {
        command: command.to_string(),
        source,
    })?;
    Ok(Report {
        command: command.to_string(),
        input: report::input_echo(spec),
        result,
        verdict,
        timing_ms: start.elapsed().as_millis(),
    })
}

/// [`run_command`] with every Gröbner basis routed through `store`.
pub fn run_command_with_store(spec: &ProblemSpec, command: Command, store: Rc<dyn BasisStore>) -> Result<Report, CommandError> {
    with_basis_store(store, || run_command(spec, command))
}

fn top_hdeg(center: &CenterPresentation) -> u32 {
    center.len() as u32
}

fn table(spec: &ProblemSpec, a: &SemifreeCDGA, hdeg: u32, weights: std::ops::RangeInclusive<i64>) -> Result<Value, dnc_core::Error> {
    let t = homology_table(a, spec.hdeg_range(0..=hdeg), spec.weight_range(weights), spec.cutoff)?;
    Ok(report::homology(&t))
}

fn rees(spec: &ProblemSpec, center: &CenterPresentation) -> Outcome {
    let r = rees_extended(center);
    let s = rees_structure(&r, spec.cutoff)?;
    let g = check_generic_fiber(&r)?;
    let result = json!({
        "presentation": report::presentation(r.cdga()),
        "tinv": r.tinv(),
        "pi0": report::pi0(&r.pi0()),
        "structure": {
            "nonpositive_free": s.nonpositive_free,
            "generated_in_weight_one": s.generated_in_weight_one,
            "weight_one_image": s.weight_one_image,
            "weight_one_is_ideal": s.weight_one_is_ideal,
            "weight_one_torsion": s.weight_one_torsion,
        },
        "generic_fiber": { "computed": g.computed, "expected": g.expected, "holds": g.holds },
        "homology": table(spec, r.cdga(), top_hdeg(center), -1..=2)?,
    });
    Ok((result, Some(s.holds() && g.holds)))
}

fn fiber(spec: &ProblemSpec, center: &CenterPresentation, kind: FiberKind) -> Outcome {
    let r = rees_extended(center);
    let f = deformation_fiber(&r, kind);
    let mut result = json!({
        "at": kind.to_string(),
        "presentation": report::presentation(&f.cdga),
        "pi0": report::pi0(&f.cdga.pi0()),
    });
    let verdict = match kind {
        FiberKind::Generic => {
            let g = check_generic_fiber(&r)?;
            result["isomorphic_to_laurent"] = json!({ "computed": g.computed, "expected": g.expected });
            g.holds
        }
        FiberKind::Special => {
            let c = check_special_fiber(&r, spec.weight_range(0..=2), spec.cutoff)?;
            result["normal_cone"] = json!({
                "presentation_equal": c.presentation_equal,
                "tables_equal": c.tables_equal,
                "certified_band": c.certified_band,
                "identification": "e_i -> -e_i",
            });
            c.presentation_equal && c.tables_equal
        }
    };
    Ok((result, Some(verdict)))
}

fn normal_cone(spec: &ProblemSpec, center: &CenterPresentation) -> Outcome {
    let cone = normal_cone_model(center);
    let r = rees_extended(center);
    let c = check_special_fiber(&r, spec.weight_range(0..=2), spec.cutoff)?;
    let classical = if center.is_empty() {
        Value::Null
    } else {
        report::pi0(&classical_normal_cone(center)?)
    };
    let result = json!({
        "presentation": report::presentation(&cone),
        "pi0": report::pi0(&cone.pi0()),
        "classical_pi0": classical,
        "homology": table(spec, &cone, top_hdeg(center), 0..=2)?,
        "special_fiber": {
            "presentation_equal": c.presentation_equal,
            "tables_equal": c.tables_equal,
            "certified_band": c.certified_band,
        },
    });
    Ok((result, Some(c.presentation_equal && c.tables_equal)))
}

fn blowup(spec: &ProblemSpec, center: &CenterPresentation) -> Outcome {
    let charts = blowup_charts(center)?;
    let mut ok = true;
    let mut out = Vec::new();
    for c in &charts {
        ok &= c.precursor_maps_to_rees && c.pi0_preserved;
        out.push(json!({
            "index": c.index,
            "exceptional_equation": c.exceptional_equation.to_string(),
            "chart_vars": c.chart_vars.iter().map(|(i, n)| json!([i, n])).collect::<Vec<_>>(),
            "presentation": report::presentation(&c.cdga),
            "pi0": report::pi0(&c.cdga.pi0()),
            "precursor_maps_to_rees": c.precursor_maps_to_rees,
            "pi0_preserved": c.pi0_preserved,
            "homology": report::homology(&chart_homology(c, spec.cutoff)?),
        }));
    }
    let mut transitions = Vec::new();
    for k in 1..=charts.len() {
        for j in 1..=charts.len() {
            if j == k {
                continue;
            }
            let t = transition(&charts, k, j)?;
            ok &= t.holds();
            transitions.push(json!({
                "from": t.from,
                "to": t.to,
                "inverse": t.inverse,
                "images": t.images.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
                "chain_map": match &t.chain_map {
                    Ok(()) => Value::Null,
                    Err((v, defect)) => json!({ "variable": v, "defect": defect }),
                },
                "pi0_round_trip": t.pi0_round_trip,
            }));
        }
    }
    let result = json!({
        "empty": charts.is_empty(),
        "charts": out,
        "transitions": transitions,
    });
    Ok((result, Some(ok)))
}

fn exceptional(spec: &ProblemSpec, center: &CenterPresentation) -> Outcome {
    let mut out = Vec::new();
    for c in &blowup_charts(center)? {
        let e = exceptional_divisor(c)?;
        out.push(json!({
            "index": c.index,
            "equation": c.exceptional_equation.to_string(),
            "presentation": report::presentation(&e),
            "pi0": report::pi0(&e.pi0()),
            "homology": table(spec, &e, top_hdeg(center) + 1, 0..=0)?,
        }));
    }
    Ok((json!({ "charts": out }), None))
}

fn compare_deformation(center: &CenterPresentation) -> Outcome {
    let c = compare_classical_deformation(center)?;
    let result = json!({
        "surjective": c.surjective,
        "closure_matches": c.closure_matches,
        "saturation_noop": c.saturation_noop,
        "torsion": c.torsion,
        "special_fiber_matches": c.special_fiber_matches,
    });
    Ok((result, Some(c.holds())))
}

fn compare_blowup(center: &CenterPresentation) -> Outcome {
    let cs = compare_classical_blowup(center)?;
    let ok = cs.iter().all(|c| c.matches);
    let charts: Vec<Value> = cs
        .iter()
        .map(|c| {
            json!({
                "index": c.index,
                "matches": c.matches,
                "saturation_noop": c.saturation_noop,
                "classical": c.classical,
                "saturated": c.saturated,
            })
        })
        .collect();
    Ok((json!({ "charts": charts }), Some(ok)))
}

fn infnbhd(spec: &ProblemSpec, center: &CenterPresentation, n: u32) -> Outcome {
    let r = rees_extended(center);
    let x = inf_neighborhood(&r, n)?;
    let k = pi0_ideal_check(center, n)?;
    let result = json!({
        "level": n,
        "zeta": x.zeta,
        "presentation": report::presentation(&x.cdga),
        "kernel": report::ideal(&x.kernel),
        "kernel_is_power": { "n": k.equals_power_n, "n+1": k.equals_power_n_plus_1 },
        "homology": table(spec, &x.cdga, top_hdeg(center) + 1, 0..=0)?,
    });
    Ok((result, None))
}

fn check_inf(spec: &ProblemSpec, center: &CenterPresentation) -> Outcome {
    let z = check_zeroth(center, spec.cutoff)?;
    let mut ok = z.pi0_equal && z.homology_equal != Some(false);
    let mut triangles = Vec::new();
    for n in 1..=INF_MAX_LEVEL {
        let t = verify_inf_triangles(center, n, spec.cutoff)?;
        if t.comparable {
            ok &= t.holds();
        }
        let row = |v: &[(u32, i64, i64, i64)]| v.iter().map(|(d, a, b, c)| json!([d, a, b, c])).collect::<Vec<_>>();
        triangles.push(json!({
            "n": n,
            "certified_band": t.certified_band,
            "comparable": t.comparable,
            "holds": if t.comparable { json!(t.holds()) } else { Value::Null },
            "failure": t.failure.map(|(which, d)| json!({ "triangle": which, "deg": d })),
            "sym_xn_xprev": row(&t.first),
            "rn1_oy_xn": row(&t.second),
        }));
    }
    let mut kernels = Vec::new();
    let mut reports = Vec::new();
    for n in 0..=INF_MAX_LEVEL {
        let k = pi0_ideal_check(center, n)?;
        kernels.push(json!({
            "n": n,
            "kernel": k.kernel,
            "equals_power_n": k.equals_power_n,
            "equals_power_n_plus_1": k.equals_power_n_plus_1,
        }));
        reports.push(k);
    }
    let offsets = consistent_offsets(&reports);
    ok &= !offsets.is_empty();
    let result = json!({
        "zeroth": {
            "pi0_equal": z.pi0_equal,
            "homology_equal": z.homology_equal,
            "certified_band": z.certified_band,
        },
        "triangles": triangles,
        "kernels": kernels,
        "kernel_power_offsets": offsets,
        "kernel_power": match offsets.as_slice() {
            [0] => json!("I^n"),
            [1] => json!("I^(n+1)"),
            [] => json!("inconsistent"),
            _ => json!("undetermined"),
        },
    });
    Ok((result, Some(ok)))
}

/// Base-change square along `Q[z] → Q[z]/(pullback)`; the identity square when
/// no pullback is given.
fn excessive(spec: &ProblemSpec, center: &CenterPresentation) -> Outcome {
    let ring = center.ambient();
    let n = center.len();
    let coefficients = (0..n)
        .map(|i| (0..n).map(|k| if i == k { Polynomial::one(ring) } else { Polynomial::zero(ring) }).collect())
        .collect();
    let data = ExcessiveSquareData {
        source: center.clone(),
        target: center.clone(),
        ambient_relations: spec.pullback_relations(),
        ambient_map: RingMap::new(ring, ring, &[])?,
        coefficients,
    };
    let rep = check_excessive(&data)?;
    let result = json!({
        "square": "base change",
        "pullback": report::polys(&data.ambient_relations),
        "well_formed": rep.well_formed,
        "classically_cartesian": rep.classically_cartesian,
        "conormal_surjective": rep.conormal_surjective,
        "excessive": rep.excessive,
        "certified_band": rep.certified_band,
    });
    Ok((result, Some(rep.excessive)))
}

fn deformation_as_blowup(center: &CenterPresentation) -> Outcome {
    let d = verify_deformation_as_blowup(center)?;
    let charts: Vec<Value> = d
        .charts
        .iter()
        .map(|c| json!({ "chart": c.chart, "removed": c.removed, "pi0_isomorphic": c.pi0_isomorphic }))
        .collect();
    Ok((json!({ "charts": charts }), Some(d.holds())))
}

fn homology(spec: &ProblemSpec, center: &CenterPresentation) -> Outcome {
    let r = rees_extended(center);
    let k = koszul_model(center)?;
    let result = json!({
        "rees": table(spec, r.cdga(), top_hdeg(center), -1..=2)?,
        "center": table(spec, &k, top_hdeg(center), 0..=0)?,
    });
    Ok((result, None))
}

fn pi0(center: &CenterPresentation) -> Outcome {
    let r = rees_extended(center);
    let k = koszul_model(center)?;
    let result = json!({
        "rees": report::pi0(&r.pi0()),
        "center": report::pi0(&k.pi0()),
        "normal_cone": report::pi0(&normal_cone_model(center).pi0()),
    });
    Ok((result, None))
}
