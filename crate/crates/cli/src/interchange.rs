//! The polynomial interchange format:
//! `{"vars": [...], "terms": [{"coeff": "p/q", "exps": [...]}]}` with the
//! variable list a subset of the fixed alphabet in canonical order, terms in
//! descending graded-lexicographic order, and coefficients as `num/den`
//! strings. Round-trips are bit-exact.

use serde::{Deserialize, Serialize};

use qaw_core::exact::rational::{coeff_string, parse_coeff};
use qaw_core::exact::NVARS;
use qaw_core::{LaurentPoly, Monomial, RatFunc, VarId};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<i32>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RatFuncJson {
    pub num: PolyJson,
    pub den: PolyJson,
}

pub fn poly_to_json(p: &LaurentPoly) -> PolyJson {
    let used = p.vars_used();
    let vars: Vec<VarId> = VarId::ALL.into_iter().filter(|v| used[v.index()]).collect();
    let mut terms: Vec<TermJson> = p
        .terms()
        .map(|(m, c)| TermJson {
            coeff: coeff_string(c),
            exps: vars.iter().map(|v| m.exp(*v)).collect(),
        })
        .collect();
    terms.reverse(); // canonical order: leading term first
    PolyJson { vars: vars.iter().map(|v| v.name().to_string()).collect(), terms }
}

#[derive(Debug, PartialEq, Eq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "interchange parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

pub fn poly_from_json(j: &PolyJson) -> Result<LaurentPoly, ParseError> {
    let vars: Vec<VarId> = j
        .vars
        .iter()
        .map(|name| VarId::from_name(name).ok_or_else(|| ParseError(format!("unknown variable {name}"))))
        .collect::<Result<_, _>>()?;
    let mut terms = Vec::with_capacity(j.terms.len());
    for t in &j.terms {
        if t.exps.len() != vars.len() {
            return Err(ParseError("exponent vector length mismatch".into()));
        }
        let coeff = parse_coeff(&t.coeff)
            .ok_or_else(|| ParseError(format!("bad coefficient {}", t.coeff)))?;
        let mut exps = [0i32; NVARS];
        for (v, e) in vars.iter().zip(&t.exps) {
            exps[v.index()] = *e;
        }
        terms.push((Monomial::from_exps(exps), coeff));
    }
    Ok(LaurentPoly::from_terms(terms))
}

pub fn ratfunc_to_json(r: &RatFunc) -> RatFuncJson {
    RatFuncJson { num: poly_to_json(r.num()), den: poly_to_json(r.den()) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qaw_core::exact::rational::rat;

    #[test]
    fn round_trip_is_bit_exact() {
        let p = LaurentPoly::var(VarId::Q).pow(2).scale(&rat(-3, 2))
            + LaurentPoly::var_pow(VarId::Z, -1)
            + LaurentPoly::one();
        let j = poly_to_json(&p);
        let s = serde_json::to_string(&j).unwrap();
        let back: PolyJson = serde_json::from_str(&s).unwrap();
        assert_eq!(poly_from_json(&back).unwrap(), p);
        assert_eq!(serde_json::to_string(&poly_to_json(&poly_from_json(&back).unwrap())).unwrap(), s);
    }

    #[test]
    fn canonical_shapes() {
        let j = poly_to_json(&LaurentPoly::zero());
        assert!(j.vars.is_empty() && j.terms.is_empty());
        let j = poly_to_json(&LaurentPoly::int(5));
        assert!(j.vars.is_empty());
        assert_eq!(j.terms[0].coeff, "5/1");
        // leading term first
        let p = LaurentPoly::var(VarId::Q) + LaurentPoly::var(VarId::Q).pow(3);
        let j = poly_to_json(&p);
        assert_eq!(j.terms[0].exps, vec![3]);
    }

    #[test]
    fn rejects_malformed_input() {
        let bad = PolyJson {
            vars: vec!["w".into()],
            terms: vec![TermJson { coeff: "1/1".into(), exps: vec![1] }],
        };
        assert!(poly_from_json(&bad).is_err());
        let bad = PolyJson {
            vars: vec!["q".into()],
            terms: vec![TermJson { coeff: "1/0".into(), exps: vec![1] }],
        };
        assert!(poly_from_json(&bad).is_err());
    }
}
