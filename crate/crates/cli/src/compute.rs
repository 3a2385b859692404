//! `compute` and `dump`: print exact objects in the interchange format (or
//! the plain-text rendering) for inspection.

use serde::{Deserialize, Serialize};

use qaw_core::exact::rational::{coeff_string, parse_coeff};
use qaw_core::genfun::{synth_p1, synth_p2, SynthInput, SynthRecurrence};
use qaw_core::ortho::{mixed_moment_oracle, Env, FamilySpec};
use qaw_core::qcore::{opbar, q_sym};
use qaw_core::{combin, dbqh, LaurentPoly, VarId};

use crate::interchange::{poly_from_json, poly_to_json, ratfunc_to_json, PolyJson};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Emit {
    Json,
    Text,
}

#[derive(Clone, Debug, Default)]
pub struct ComputeArgs {
    pub family: Option<String>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub height: Option<usize>,
    pub input: Option<String>,
    pub emit: Emit,
}

impl Default for Emit {
    fn default() -> Self {
        Emit::Json
    }
}

fn family_spec(name: &str) -> Result<FamilySpec, String> {
    let env = Env::symbolic();
    Ok(match name {
        "qhermite" => FamilySpec::q_hermite(env),
        "big" => FamilySpec::big_q_hermite(env),
        "asc" => FamilySpec::al_salam_chihara(env),
        "dualqhahn" => FamilySpec::dual_q_hahn(env),
        "aw" => FamilySpec::askey_wilson(env),
        "dqh1" => FamilySpec::discrete_q_hermite_i(env),
        "dqh2" => FamilySpec::discrete_q_hermite_ii(env),
        other => return Err(format!("unknown family `{other}`")),
    })
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, String> {
    v.ok_or_else(|| format!("missing required flag --{flag}"))
}

fn render_poly(p: &LaurentPoly, emit: Emit) -> String {
    match emit {
        Emit::Json => serde_json::to_string(&poly_to_json(p)).expect("poly serializes"),
        Emit::Text => format!("{p}"),
    }
}

/// The serialized form of a synthesized recurrence: the leading scale `A`,
/// the depth, and the coefficients `C_0..C_{d-2}` in `(s, y, q, params)`.
#[derive(Serialize)]
struct RecurrenceJson {
    #[serde(rename = "A")]
    lead: String,
    depth: usize,
    coeffs: Vec<PolyJson>,
}

/// Recurrence-family input accepted by `compute synth-recurrence --input`:
/// `A` as `num/den`, `b` and `lambda_over` (that is, `lambda_k/(1-q^k)`) as
/// interchange polynomials in `s`, and `flip` selecting the `q^{-k}` route.
#[derive(Deserialize)]
pub struct RecurrenceInputJson {
    #[serde(rename = "A")]
    pub lead: String,
    pub b: PolyJson,
    pub lambda_over: PolyJson,
    #[serde(default)]
    pub flip: bool,
}

fn synth_input_from_json(j: &RecurrenceInputJson) -> Result<(SynthInput, bool), String> {
    let lead = parse_coeff(&j.lead).ok_or_else(|| format!("bad leading scale {}", j.lead))?;
    let b = poly_from_json(&j.b).map_err(|e| e.to_string())?;
    let lam = poly_from_json(&j.lambda_over).map_err(|e| e.to_string())?;
    let to_list = |p: &LaurentPoly| -> Result<Vec<LaurentPoly>, String> {
        let coeffs = p.coeffs_in(VarId::S);
        let deg = coeffs.keys().max().copied().unwrap_or(0);
        if coeffs.keys().min().copied().unwrap_or(0) < 0 {
            return Err("recurrence data must use nonnegative powers of s".into());
        }
        Ok((0..=deg).map(|j| coeffs.get(&j).cloned().unwrap_or_else(LaurentPoly::zero)).collect())
    };
    Ok((SynthInput::new(lead, to_list(&b)?, to_list(&lam)?), j.flip))
}

fn builtin_synth_input(name: &str) -> Result<(SynthInput, bool), String> {
    use qaw_core::exact::rational::rat_int;
    let one = LaurentPoly::one();
    let zero = LaurentPoly::zero;
    let a = LaurentPoly::var(VarId::A);
    let b = LaurentPoly::var(VarId::B);
    let c = LaurentPoly::var(VarId::C);
    let q_inv = LaurentPoly::var_pow(VarId::Q, -1);
    Ok(match name {
        "qhermite" => (SynthInput::new(rat_int(2), vec![], vec![one]), false),
        "big" => (SynthInput::new(rat_int(2), vec![zero(), a], vec![one]), false),
        "asc" => (
            SynthInput::new(rat_int(2), vec![zero(), &a + &b], vec![one, -(&a * &b * &q_inv)]),
            false,
        ),
        "dualqhahn" => {
            let abc = &a * &b * &c;
            let e1 = &a + &b + &c;
            (
                SynthInput::new(
                    rat_int(2),
                    vec![zero(), &e1 + &abc * &q_inv, -(&abc * (&one + &q_inv))],
                    vec![
                        one.clone(),
                        -((&a * &b + &b * &c + &c * &a) * &q_inv),
                        &abc * &e1 * &q_inv * &q_inv,
                        -(&abc * &abc * &q_inv * &q_inv * &q_inv),
                    ],
                ),
                false,
            )
        }
        "dqh1" => (SynthInput::new(rat_int(1), vec![], vec![zero(), q_inv]), false),
        "dqh2" => (SynthInput::new(rat_int(1), vec![], vec![zero(), zero(), q_sym()]), true),
        "asc1" => (SynthInput::new(rat_int(1), vec![zero(), one], vec![]), false),
        "asc2" => (SynthInput::new(rat_int(-1), vec![zero(), -one], vec![]), true),
        other => return Err(format!("unknown recurrence input `{other}`")),
    })
}

fn render_recurrence(rec: &SynthRecurrence, emit: Emit) -> String {
    match emit {
        Emit::Json => {
            let j = RecurrenceJson {
                lead: coeff_string(&rec.lead),
                depth: rec.depth(),
                coeffs: rec.coeffs.iter().map(poly_to_json).collect(),
            };
            serde_json::to_string(&j).expect("recurrence serializes")
        }
        Emit::Text => {
            let mut out = format!("P(n+1) = ({} x", rec.lead);
            if let Some(c0) = rec.coeffs.first() {
                out.push_str(&format!(" - [{c0}]"));
            }
            out.push_str(") P(n)");
            for (i, c) in rec.coeffs.iter().enumerate().skip(1) {
                out.push_str(&format!(" - [{c}] P(n-{i})"));
            }
            out.push_str("   where s = q^n");
            out
        }
    }
}

/// Evaluate one `compute` request to its serialized output line.
pub fn compute(what: &str, args: &ComputeArgs) -> Result<String, String> {
    match what {
        "family-poly" => {
            let spec = family_spec(args.family.as_deref().unwrap_or("qhermite"))?;
            let n = need(args.n, "n")?;
            Ok(render_poly(&spec.poly(n), args.emit))
        }
        "mixed-moment" => {
            let spec = family_spec(args.family.as_deref().unwrap_or("qhermite"))?;
            let n = need(args.n, "n")?;
            let m = args.m.unwrap_or(0);
            let v = mixed_moment_oracle(&spec, n, m);
            Ok(match args.emit {
                Emit::Json => serde_json::to_string(&ratfunc_to_json(&v)).expect("serializes"),
                Emit::Text => format!("{v}"),
            })
        }
        "opbar" => {
            let n = need(args.n, "n")?;
            let m = args.m.unwrap_or(0);
            Ok(render_poly(&opbar(n, m, &q_sym()), args.emit))
        }
        "hstar" =>istr(args, |n| Ok(dbqh::hstar(n))),
        "h" => istr(args, |n| Ok(dbqh::h_explicit(n))),
        "motzkin-sum" => {
            let n = need(args.n, "n")?;
            let height = args.height.unwrap_or(0);
            if height > 1 {
                return Err("height must be 0 or 1".into());
            }
            Ok(render_poly(&combin::motzkin_sum(n, height), args.emit))
        }
        "fbm-sum" => istr(args, |n| {
            combin::fbm_weight_sum(n).map_err(|e| format!("{e}"))
        }),
        "synth-recurrence" => {
            let (input, flip) = match &args.input {
                Some(path) => {
                    let text =
                        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
                    let j: RecurrenceInputJson =
                        serde_json::from_str(&text).map_err(|e| format!("bad input file: {e}"))?;
                    synth_input_from_json(&j)?
                }
                None => builtin_synth_input(args.family.as_deref().unwrap_or(""))?,
            };
            let rec = if flip {
                synth_p2(&input).map_err(|e| format!("{e}"))?
            } else {
                synth_p1(&input)
            };
            Ok(render_recurrence(&rec, args.emit))
        }
        other => Err(format!("unknown compute target `{other}`")),
    }
}

fn istr(
    args: &ComputeArgs,
    f: impl Fn(usize) -> Result<LaurentPoly, String>,
) -> Result<String, String> {
    let n = need(args.n, "n")?;
    Ok(render_poly(&f(n)?, args.emit))
}

#[derive(Serialize)]
struct FbmLine {
    n: usize,
    edges: Vec<[usize; 2]>,
    colors: std::collections::BTreeMap<String, &'static str>,
}

#[derive(Serialize)]
struct MotzkinLine {
    steps: String,
}

/// Enumerate objects, one JSON object per line, in the canonical order
/// (lexicographic in the serialized form).
pub fn dump(what: &str, n: usize, height: usize) -> Result<String, String> {
    let mut lines: Vec<String> = match what {
        "fbm" => combin::enumerate_fbm(n)
            .map_err(|e| format!("{e}"))?
            .iter()
            .map(|m| {
                let fixed = m.fixed_points();
                let colors = fixed
                    .iter()
                    .zip(&m.colors)
                    .map(|(p, c)| {
                        (p.to_string(), if *c == combin::Color::X { "x" } else { "y" })
                    })
                    .collect();
                let line = FbmLine {
                    n: m.n,
                    edges: m.edges.iter().map(|&(u, v)| [u, v]).collect(),
                    colors,
                };
                serde_json::to_string(&line).expect("serializes")
            })
            .collect(),
        "motzkin" => {
            if height > 1 {
                return Err("height must be 0 or 1".into());
            }
            combin::enumerate_motzkin2(n, height)
                .iter()
                .map(|p| {
                    let steps: String = p.steps.iter().map(|s| s.letter()).collect();
                    serde_json::to_string(&MotzkinLine { steps }).expect("serializes")
                })
                .collect()
        }
        other => return Err(format!("unknown dump target `{other}`")),
    };
    lines.sort();
    Ok(lines.join("\n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn opbar_compute_matches_module() {
        let out = compute(
            "opbar",
            &ComputeArgs { n: Some(2), m: Some(0), ..Default::default() },
        )
        .unwrap();
        // 1 - q serialized with leading term first
        assert_eq!(out, r#"{"vars":["q"],"terms":[{"coeff":"-1/1","exps":[1]},{"coeff":"1/1","exps":[0]}]}"#);
    }

    #[test]
    fn synth_recurrence_builtin() {
        let out = compute(
            "synth-recurrence",
            &ComputeArgs { family: Some("asc".into()), ..Default::default() },
        )
        .unwrap();
        assert!(out.contains("\"depth\":4"));
    }

    #[test]
    fn dump_counts() {
        let fbm = dump("fbm", 2, 0).unwrap();
        assert_eq!(fbm.lines().count(), 5);
        let mot = dump("motzkin", 2, 0).unwrap();
        assert_eq!(mot.lines().count(), 2);
        assert!(dump("nope", 1, 0).is_err());
    }

    #[test]
    fn synth_recurrence_from_file() {
        let dir = std::env::temp_dir().join("qawverify-test-input");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("qhermite.json");
        // q-Hermite data: A=2, b = 0, lambda/(1-q^k) = 1
        std::fs::write(
            &path,
            r#"{"A":"2/1","b":{"vars":[],"terms":[]},"lambda_over":{"vars":[],"terms":[{"coeff":"1/1","exps":[]}]},"flip":false}"#,
        )
        .unwrap();
        let out = compute(
            "synth-recurrence",
            &ComputeArgs {
                input: Some(path.to_string_lossy().into_owned()),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(out.contains("\"depth\":3"));
    }
}
