//! Named operations with JSON arguments and JSON results, shared by the
//! scenario runner and the command line.

use blowcalc::{
    bezout_requirement, curve_blowup, dp1_discriminant, hirz_intersect, infeasible, p2k_intersect,
    zero_stratum_from_classes, HirzClass, NormalBundle, P2kClass,
};
use dualcx::{coreg_verdict, regularity, toric::toric_fano, DualComplex, Fan, SncConfig};
use genericity::{
    avoid_generic, linear_codim, locus_codim, quartic_section_ledger, CoeffSpace, IncidenceSetup, Parametrization,
};
use lct::{curve_lct, pencil_klt_certificate, weight_search, weighted_bound, Threshold};
use polyring::{fmt_rat, parse_germ, parse_germ_auto, Germ, Monomial, Rat, WeightVector};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use singclass::{
    classify_cubic, hessian_split, normal_form, strict_lc1_screen, strict_lc2_screen, Lc2Verdict, NormalFormKind,
};

use crate::catalog::family;
use crate::CoregError;

pub const OPS: &[&str] = &[
    "avoid_generic",
    "bezout_requirement",
    "classify_cubic",
    "coreg_verdict",
    "curve_blowup",
    "curve_lct",
    "dp1",
    "dualcx",
    "family",
    "hessian_split",
    "hirz_intersect",
    "infeasible",
    "lc1_screen",
    "lc2_screen",
    "linear_codim",
    "locus_codim",
    "normal_form",
    "p2k_intersect",
    "pencil_certificate",
    "quartic_ledger",
    "toric",
    "verify",
    "weight_search",
    "weighted_bound",
    "zero_stratum",
];

fn field<'a>(args: &'a Value, key: &str) -> Result<&'a Value, CoregError> {
    args.get(key).ok_or_else(|| CoregError::Input(format!("missing argument {key:?}")))
}

fn typed<T: DeserializeOwned>(args: &Value, key: &str) -> Result<T, CoregError> {
    serde_json::from_value(field(args, key)?.clone()).map_err(|e| CoregError::Input(format!("argument {key:?}: {e}")))
}

fn opt<T: DeserializeOwned>(args: &Value, key: &str) -> Result<Option<T>, CoregError> {
    match args.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(_) => typed(args, key).map(Some),
    }
}

pub fn germ_arg(args: &Value, key: &str) -> Result<Germ, CoregError> {
    let text: String = typed(args, key)?;
    Ok(match opt::<usize>(args, "nvars")? {
        Some(n) => parse_germ(&text, n)?,
        None => parse_germ_auto(&text)?,
    })
}

fn rat_arg(args: &Value, key: &str) -> Result<Rat, CoregError> {
    match field(args, key)? {
        Value::Number(n) => n
            .as_i64()
            .map(|x| Rat::from_integer(x.into()))
            .ok_or_else(|| CoregError::Input(format!("argument {key:?} is not an integer"))),
        Value::String(s) => Ok(polyring::parse_rat(s)?),
        v => Err(CoregError::Input(format!("argument {key:?}: expected a rational, got {v}"))),
    }
}

pub fn threshold_json(t: &Threshold) -> Value {
    json!({
        "value": fmt_rat(&t.value),
        "kind": format!("{:?}", t.kind),
        "certificate": t.certificate.summary(),
    })
}

fn to_value<T: serde::Serialize>(x: &T) -> Result<Value, CoregError> {
    Ok(serde_json::to_value(x)?)
}

fn rats(v: &[Rat]) -> Vec<String> {
    v.iter().map(fmt_rat).collect()
}

fn hirz_json(c: &HirzClass) -> Value {
    json!({ "class": c.to_string(), "n": c.n, "a": c.a, "b": c.b })
}

pub fn run_op(op: &str, args: &Value, seed: u64) -> Result<Value, CoregError> {
    match op {
        "curve_lct" => Ok(threshold_json(&curve_lct(&germ_arg(args, "germ")?)?)),
        "weighted_bound" => {
            let w: Vec<i64> = typed(args, "weights")?;
            Ok(threshold_json(&weighted_bound(&WeightVector::from_ints(&w)?, &germ_arg(args, "germ")?)?))
        }
        "weight_search" => {
            let (w, t) = weight_search(&germ_arg(args, "germ")?)?;
            let mut v = threshold_json(&t);
            v["weights"] = json!(rats(w.as_slice()));
            Ok(v)
        }
        "pencil_certificate" => {
            let (a, b): (usize, usize) = typed(args, "pencil")?;
            let samples = opt::<usize>(args, "samples")?.unwrap_or(5);
            let c = pencil_klt_certificate(&germ_arg(args, "germ")?, (a, b), samples)?;
            Ok(json!({
                "certified": c.certified,
                "samples": rats(&c.samples),
                "thresholds": c.thresholds.iter().map(|t| fmt_rat(&t.value)).collect::<Vec<_>>(),
                "failure": c.failure,
            }))
        }
        "hessian_split" => {
            let q = hessian_split(&germ_arg(args, "germ")?)?;
            Ok(json!({
                "rank": q.rank,
                "diagonal": rats(&q.diagonal),
                "tail": q.tail.map(|t| t.to_string()),
            }))
        }
        "classify_cubic" => Ok(json!({ "type": classify_cubic(&germ_arg(args, "germ")?)?.to_string() })),
        "lc1_screen" => Ok(json!({ "verdict": to_value(&strict_lc1_screen(&germ_arg(args, "germ")?)?)? })),
        "lc2_screen" => {
            let v = strict_lc2_screen(&germ_arg(args, "germ")?)?;
            let mut out = json!({ "verdict": v.tag() });
            if let Lc2Verdict::KltCertified(c) = &v {
                out["certificate"] = json!(c.name());
                out["weights"] = json!(c.weights());
            }
            Ok(out)
        }
        "normal_form" => {
            let kind: NormalFormKind = typed(args, "kind")?;
            Ok(json!({ "germ": normal_form(&kind)?.to_string() }))
        }
        "curve_blowup" => {
            let (a, b): (i64, i64) = typed(args, "normal")?;
            let nb = NormalBundle::new(a, b)?;
            let r = curve_blowup(nb, typed(args, "ldot")?);
            let e_cubed = hirz_intersect(&r.e_self, &r.e_self)?;
            Ok(json!({
                "hirzebruch_index": r.hirzebruch_index,
                "c": r.c,
                "e_self": hirz_json(&r.e_self),
                "d_restrict": hirz_json(&r.d_restrict),
                "e_cubed": e_cubed,
                "note": r.note,
            }))
        }
        "hirz_intersect" => {
            let c1: HirzClass = typed(args, "c1")?;
            let c2: HirzClass = typed(args, "c2")?;
            Ok(json!({ "value": hirz_intersect(&c1, &c2)? }))
        }
        "zero_stratum" => {
            let d1: HirzClass = typed(args, "d1")?;
            let d2: HirzClass = typed(args, "d2")?;
            Ok(json!({ "meets": zero_stratum_from_classes(&d1, &d2)?, "points": hirz_intersect(&d1, &d2)? }))
        }
        "dualcx" => {
            let config: SncConfig = typed(args, "config")?;
            let dc = DualComplex::build(&config)?;
            to_value(&regularity(&dc, config.ambient_dim, opt(args, "level")?))
        }
        "toric" => {
            let fan = match (opt::<String>(args, "family")?, opt::<Fan>(args, "fan")?) {
                (Some(id), None) => {
                    toric_fano(&id).ok_or_else(|| CoregError::Input(format!("{id} is not a toric family")))?
                }
                (None, Some(f)) => {
                    f.validate()?;
                    f
                }
                _ => return Err(CoregError::Input("toric needs exactly one of \"family\", \"fan\"".into())),
            };
            fan_report(&fan)
        }
        "coreg_verdict" => {
            let v = coreg_verdict(typed(args, "reg1")?, typed(args, "reg2")?, typed(args, "n")?)?;
            Ok(json!({ "verdict": to_value(&v)? }))
        }
        "p2k_intersect" => {
            let c1: P2kClass = typed(args, "c1")?;
            let c2: P2kClass = typed(args, "c2")?;
            Ok(json!({ "value": fmt_rat(&p2k_intersect(&c1, &c2)?) }))
        }
        "bezout_requirement" => {
            let curve: P2kClass = typed(args, "curve")?;
            let mults = typed::<P2kClass>(&json!({ "c": { "d": 0, "m": field(args, "mults")? } }), "c")?.m;
            let extra = if args.get("extra").is_some() { rat_arg(args, "extra")? } else { Rat::from_integer(0.into()) };
            Ok(json!({ "value": fmt_rat(&bezout_requirement(&curve, &mults, extra)?) }))
        }
        "infeasible" => {
            let b: P2kClass = typed(args, "b")?;
            let c: P2kClass = typed(args, "c")?;
            let required = rat_arg(args, "required")?;
            Ok(json!({
                "pairing": fmt_rat(&p2k_intersect(&b, &c)?),
                "required": fmt_rat(&required),
                "infeasible": infeasible(&b, &c, &required)?,
            }))
        }
        "dp1" => {
            let f4 = parse_germ(&typed::<String>(args, "f4")?, 2)?;
            let f6 = parse_germ(&typed::<String>(args, "f6")?, 2)?;
            let r = dp1_discriminant(&f4, &f6)?;
            let mut v = to_value(&r)?;
            v["total"] = json!(r.total());
            Ok(v)
        }
        "linear_codim" => {
            let space = CoeffSpace::graded(typed(args, "nvars")?, &typed::<Vec<u32>>(args, "degrees")?);
            let vanishing: Vec<Vec<u32>> = typed(args, "vanishing")?;
            let mons: Vec<Monomial> = vanishing.into_iter().map(Monomial).collect();
            Ok(json!({ "codim": linear_codim(&space, &mons)?, "space_dim": space.dim() }))
        }
        "locus_codim" => {
            let p = Parametrization::product_of_linear_forms(
                typed(args, "nvars")?,
                &typed::<Vec<u32>>(args, "exponents")?,
            )?;
            let trials = opt::<usize>(args, "trials")?.unwrap_or(3);
            to_value(&locus_codim(&p, trials, seed)?)
        }
        "quartic_ledger" => {
            let trials = opt::<usize>(args, "trials")?.unwrap_or(3);
            let entries = quartic_section_ledger(trials, seed)?;
            Ok(json!({
                "entries": to_value(&entries)?,
                "on_f": entries.iter().map(|e| e.on_f).collect::<Vec<_>>(),
                "all_match": entries.iter().all(|e| e.matches()),
            }))
        }
        "avoid_generic" => {
            let setup = IncidenceSetup { n: typed(args, "n")?, fiber_codim: typed(args, "fiber_codim")? };
            Ok(json!({ "avoids": avoid_generic(setup) }))
        }
        "family" => to_value(family(&typed::<String>(args, "id")?)?),
        "verify" => to_value(&crate::verify_builtin(&typed::<String>(args, "id")?)?),
        other => Err(CoregError::UnknownOp(other.to_string())),
    }
}

pub fn fan_report(fan: &Fan) -> Result<Value, CoregError> {
    let dc = DualComplex::build(&fan.toric_boundary()?)?;
    let mut v = to_value(&regularity(&dc, fan.dim, Some(1)))?;
    v["picard_rank"] = json!(fan.picard_rank());
    v["smooth"] = json!(fan.is_smooth());
    v["anticanonical_degree"] = json!(fan.anticanonical_degree().ok().flatten());
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thresholds() {
        let v = run_op("weighted_bound", &json!({ "germ": "x1^2*x2 + x2^4", "weights": [3, 2] }), 0).unwrap();
        assert_eq!(v["value"], "5/8");
        let v = run_op("curve_lct", &json!({ "germ": "x1^2 + x2^3" }), 0).unwrap();
        assert_eq!((v["value"].as_str(), v["kind"].as_str()), (Some("5/6"), Some("Exact")));
    }

    #[test]
    fn blowup_and_strata() {
        let v = run_op("curve_blowup", &json!({ "normal": [0, 1], "ldot": 2 }), 0).unwrap();
        assert_eq!(v["d_restrict"]["class"], "s+2f");
        assert_eq!(v["e_cubed"], -1);
        let z = run_op("zero_stratum", &json!({ "d1": v["d_restrict"], "d2": v["d_restrict"] }), 0).unwrap();
        assert_eq!(z, json!({ "meets": true, "points": 3 }));
    }

    #[test]
    fn lattice_ops() {
        let v = run_op(
            "infeasible",
            &json!({ "b": { "d": 2, "m": [0, 0, 0, 0, 0, 0, 0, 0] }, "c": { "d": 2, "m": [1, 1, 1, 1, 1, 0, 0, 0] }, "required": 5 }),
            0,
        )
        .unwrap();
        assert_eq!((v["pairing"].as_str(), v["infeasible"].as_bool()), (Some("4"), Some(true)));
        let v = run_op("bezout_requirement", &json!({ "curve": { "d": 2, "m": [1, 1] }, "mults": ["1/2", "1/2"] }), 0)
            .unwrap();
        assert_eq!(v["value"], "1");
    }

    #[test]
    fn errors() {
        assert_eq!(run_op("frobnicate", &json!({}), 0), Err(CoregError::UnknownOp("frobnicate".into())));
        assert!(matches!(run_op("curve_lct", &json!({}), 0), Err(CoregError::Input(_))));
        assert!(matches!(run_op("toric", &json!({ "family": "1.1" }), 0), Err(CoregError::Input(_))));
    }

    #[test]
    fn toric_family() {
        let v = run_op("toric", &json!({ "family": "2.35" }), 0).unwrap();
        assert_eq!((v["coreg"].as_i64(), v["anticanonical_degree"].as_i64()), (Some(0), Some(56)));
    }
}
