//! Check reports: per-case lines plus a summary, rendered as line-delimited
//! JSON (stable field order) or plain text. Two runs with identical flags
//! produce byte-identical reports; wall time therefore never enters the
//! report stream (the binary prints it to stderr).

use serde::Serialize;

use qaw_core::RatFunc;

use crate::interchange::{ratfunc_to_json, RatFuncJson};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    /// Used only for the two normalization-comparison checks; never folded
    /// into pass/fail and never affects the exit code.
    #[serde(rename = "REPORTED")]
    Reported,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct CaseParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl CaseParams {
    pub fn n(n: usize) -> Self {
        CaseParams { n: Some(n as i64), ..Default::default() }
    }

    pub fn nm(n: usize, m: usize) -> Self {
        CaseParams { n: Some(n as i64), m: Some(m as i64), ..Default::default() }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = Some(order);
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<CaseParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<RatFuncJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<RatFuncJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Case {
    pub fn pass(id: String, params: CaseParams) -> Self {
        Case { id, status: Status::Pass, params: Some(params), lhs: None, rhs: None, note: None }
    }

    pub fn of_eq(id: String, params: CaseParams, lhs: &RatFunc, rhs: &RatFunc) -> Self {
        if lhs == rhs {
            Self::pass(id, params)
        } else {
            Case {
                id,
                status: Status::Fail,
                params: Some(params),
                lhs: Some(ratfunc_to_json(lhs)),
                rhs: Some(ratfunc_to_json(rhs)),
                note: None,
            }
        }
    }

    pub fn of_bool(id: String, params: CaseParams, ok: bool) -> Self {
        Case {
            id,
            status: if ok { Status::Pass } else { Status::Fail },
            params: Some(params),
            lhs: None,
            rhs: None,
            note: None,
        }
    }

    pub fn reported(
        id: String,
        params: CaseParams,
        lhs: &RatFunc,
        rhs: &RatFunc,
        note: &str,
    ) -> Self {
        Case {
            id,
            status: Status::Reported,
            params: Some(params),
            lhs: Some(ratfunc_to_json(lhs)),
            rhs: Some(ratfunc_to_json(rhs)),
            note: Some(note.to_string()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Symbolic for families with at most three parameters, seeded probe for
    /// Askey-Wilson.
    Auto,
    Symbolic,
    Probe,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct SuiteOptions {
    pub nmax: usize,
    pub order: usize,
    pub mode: Mode,
    pub trials: u32,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { nmax: 6, order: 8, mode: Mode::Auto, trials: 20, seed: 20240101 }
    }
}

impl SuiteOptions {
    /// Whether the Askey-Wilson checks run by probe under these options.
    pub fn aw_by_probe(&self) -> bool {
        !matches!(self.mode, Mode::Symbolic)
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub suite: String,
    pub options: SuiteOptions,
    pub cases: Vec<Case>,
}

#[derive(Serialize)]
struct Header<'a> {
    schema: u32,
    suite: &'a str,
    options: &'a SuiteOptions,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: Summary<'a>,
}

#[derive(Serialize)]
struct Summary<'a> {
    suite: &'a str,
    pass: usize,
    fail: usize,
    reported: usize,
    cases: usize,
}

impl CheckReport {
    pub fn count(&self, status: Status) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }

    pub fn has_fail(&self) -> bool {
        self.count(Status::Fail) > 0
    }

    /// 0 when no case failed, 1 otherwise; REPORTED never affects it.
    pub fn exit_code(&self) -> i32 {
        if self.has_fail() {
            1
        } else {
            0
        }
    }

    fn sorted_cases(&self) -> Vec<&Case> {
        let mut cases: Vec<&Case> = self.cases.iter().collect();
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        cases
    }

    /// Line-delimited JSON: header, one line per case (sorted by id), summary.
    pub fn render_json(&self) -> String {
        let mut out = String::new();
        let header = Header { schema: 1, suite: &self.suite, options: &self.options };
        out.push_str(&serde_json::to_string(&header).expect("report serializes"));
        out.push('\n');
        for case in self.sorted_cases() {
            out.push_str(&serde_json::to_string(case).expect("case serializes"));
            out.push('\n');
        }
        let summary = SummaryLine {
            summary: Summary {
                suite: &self.suite,
                pass: self.count(Status::Pass),
                fail: self.count(Status::Fail),
                reported: self.count(Status::Reported),
                cases: self.cases.len(),
            },
        };
        out.push_str(&serde_json::to_string(&summary).expect("summary serializes"));
        out.push('\n');
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite {} (schema 1)\n", self.suite));
        for case in self.sorted_cases() {
            let status = match case.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Reported => "REPORTED",
            };
            out.push_str(&format!("{status:8} {}", case.id));
            if let Some(note) = &case.note {
                out.push_str(&format!("  [{note}]"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} reported, {} cases\n",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Reported),
            self.cases.len()
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qaw_core::LaurentPoly;

    #[test]
    fn exit_code_contract() {
        let mut report = CheckReport {
            suite: "demo".into(),
            options: SuiteOptions::default(),
            cases: vec![Case::pass("a".into(), CaseParams::default())],
        };
        assert_eq!(report.exit_code(), 0);
        let one = RatFunc::from_poly(LaurentPoly::one());
        report.cases.push(Case::reported("b".into(), CaseParams::default(), &one, &one, "note"));
        assert_eq!(report.exit_code(), 0, "REPORTED must not affect the exit code");
        report.cases.push(Case::of_eq(
            "c".into(),
            CaseParams::default(),
            &one,
            &RatFunc::from_poly(LaurentPoly::int(2)),
        ));
        assert_eq!(report.exit_code(), 1);
    }

    #[test]
    fn rendering_is_deterministic_and_sorted() {
        let report = CheckReport {
            suite: "demo".into(),
            options: SuiteOptions::default(),
            cases: vec![
                Case::pass("z/2".into(), CaseParams::n(2)),
                Case::pass("a/1".into(), CaseParams::n(1)),
            ],
        };
        let r1 = report.render_json();
        let r2 = report.render_json();
        assert_eq!(r1, r2);
        let lines: Vec<&str> = r1.lines().collect();
        assert!(lines[0].contains("\"schema\":1"));
        assert!(lines[1].contains("a/1") && lines[2].contains("z/2"));
        assert!(lines[3].contains("\"summary\""));
    }
}
