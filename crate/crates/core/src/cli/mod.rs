//! Scenario runners behind the `commensurator` binary.
//!
//! Each runner returns a [`ScenarioReport`]: a list of checks with expected
//! and actual values, printable as text or JSON. Apart from the timing
//! field, reports are deterministic.

mod report;

use std::path::Path;
use std::time::Instant;

use serde::Serialize;

use crate::comm::{
    bs_kernel_witness_check, build_bs_pair, decide_comm_word, sequential_evaluate, BsPair, CommError,
    CommWordProblemInstance, LettersFile, Verdict,
};
use crate::iso::SubgroupIso;
use crate::stallings::WitnessGraph;
use crate::words::{GroupPresentation, Word};

pub use report::{Check, ScenarioReport};

/// Shipped `ψ` for the free group (inverse images are derived).
pub const PSI_FREE_JSON: &str = include_str!("../../data/psi_free.json");
/// Shipped `ψ` for the genus-2 surface group.
pub const PSI_SURFACE_JSON: &str = include_str!("../../data/psi_surface.json");

/// `γ = b⁻¹aba⁻¹b⁻¹aba⁻¹b⁻¹` over the letters `a ↦ ψ`, `b ↦ φ`.
pub const GAMMA_WORD: &str = "b^-1 a b a^-1 b^-1 a b a^-1 b^-1";
/// Expected image of `B·A·B⁻¹·A⁻¹` under `γ` with the shipped free `ψ`.
pub const FREE_EXPECTED_OUTPUT: &str = "A^3*B*A*B^-1*A^2";
/// Expected image of `C` under `γ` with the shipped surface `ψ`, up to equality
/// in the surface group.
pub const SURFACE_EXPECTED_OUTPUT: &str = "A^-1*B^2*A^-1*B^-2*(A^-1*C*D*C^-1*D^-1*A*B)^2*A*B^-2*A^3*B*A^-1
*D*C*D^-1*C^-1*A*B^-1*A^-1*D*C*D^-1*C^-1*A^-2*B^2*A*B^-1*A^-1*D
*C*D^-1*C*D*C^-1*D^-1*A*B*A^-1*B^-2*A^2*C*D*C^-1*D^-1*A*B*A^-1
*C*D*C^-1*D^-1*A*B^-1*A^-3*B^2*A^-1*(B^-1*A^-1*D*C*D^-1*C^-1*A)^2
*B^2*A*B^-2*A";

/// Where `ψ` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiSource<'a> {
    /// The data shipped with the crate.
    Shipped,
    /// An iso definition file.
    File(&'a Path),
    /// The automatic free-group `ψ` pairing the kernels' bases.
    Auto,
}

fn load_psi(group: &GroupPresentation, source: PsiSource, shipped: &str) -> Result<Option<SubgroupIso>, CommError> {
    let iso = match source {
        PsiSource::Shipped => SubgroupIso::from_json(shipped)?,
        PsiSource::File(p) => SubgroupIso::load(p)?,
        PsiSource::Auto => return Ok(None),
    };
    if iso.group() != group {
        return Err(CommError::GroupMismatch);
    }
    Ok(Some(iso))
}

/// Builds the `(2,3)` pair, recording the outcome as the first check.
fn pair_or_fail(report: &mut ScenarioReport, group: &GroupPresentation, source: PsiSource, shipped: &str) -> Option<BsPair> {
    let built = load_psi(group, source, shipped).and_then(|iso| build_bs_pair(group, 2, 3, iso));
    match built {
        Ok(pair) => {
            report.push(Check::exact("psi data valid and psi phi^2 psi^-1 = phi^3", "valid", "valid"));
            Some(pair)
        }
        Err(e) => {
            report.push(Check::exact("psi data valid and psi phi^2 psi^-1 = phi^3", "valid", &e.to_string()));
            None
        }
    }
}

fn common_checks(report: &mut ScenarioReport, group: &GroupPresentation, pair: &BsPair) {
    let psi = pair.psi.rep();
    let a2 = group.parse("A^-2").expect("word");
    let img = psi.evaluate(&a2).map(|w| group.format(&w)).unwrap_or_else(|e| e.to_string());
    report.push(Check::exact("psi(A^-2)", "A^-3", &img));
    report.push(Check::exact(
        "index(K1) = index(K2)",
        "6 = 6",
        &format!("{} = {}", psi.domain().index(), psi.codomain().index()),
    ));
}

fn gamma_output(report: &mut ScenarioReport, group: &GroupPresentation, pair: &BsPair, test: &Word) -> Option<Word> {
    let inst = CommWordProblemInstance::parse(pair.letters(), GAMMA_WORD).expect("fixed word");
    match sequential_evaluate(&inst, test) {
        Ok(w) => Some(w),
        Err(e) => {
            report.push(Check::exact(
                &format!("gamma applied to {}", group.format(test)),
                "defined",
                &e.to_string(),
            ));
            None
        }
    }
}

/// `γ` evaluated on `B·A·B⁻¹·A⁻¹` in the free group.
pub fn free_demo(source: PsiSource) -> ScenarioReport {
    let start = Instant::now();
    let group = GroupPresentation::free_rank2();
    let mut report = ScenarioReport::new("free-demo");
    if let Some(pair) = pair_or_fail(&mut report, &group, source, PSI_FREE_JSON) {
        common_checks(&mut report, &group, &pair);
        let psi = pair.psi.rep();
        let surjective = WitnessGraph::fold(2, psi.images()).equals_table(psi.codomain());
        report.push(Check::exact("image of K1 under psi equals K2", "true", &surjective.to_string()));
        let test = group.parse("B*A*B^-1*A^-1").expect("word");
        if let Some(out) = gamma_output(&mut report, &group, &pair, &test) {
            let desc = "gamma applied to B*A*B^-1*A^-1";
            let actual = group.format(&out);
            report.push(match source {
                PsiSource::Shipped => Check::exact(desc, FREE_EXPECTED_OUTPUT, &actual),
                _ => Check::info(desc, &actual),
            });
            let differs = if group.words_equal(&out, &test) { "equal" } else { "not equal" };
            report.push(Check::exact("output compared with input", "not equal", differs));
        }
        let verdict = CommWordProblemInstance::parse(pair.letters(), GAMMA_WORD)
            .and_then(|inst| decide_comm_word(&inst, &group));
        report.push(Check::exact("gamma in the commensurator", "nontrivial", &verdict_text(&verdict)));
    }
    report.finish(start)
}

/// `γ` evaluated on `C` in the genus-2 surface group.
pub fn surface_demo(source: PsiSource) -> ScenarioReport {
    let start = Instant::now();
    let group = GroupPresentation::genus2();
    let mut report = ScenarioReport::new("surface-demo");
    if source == PsiSource::Auto {
        report.push(Check::exact("psi data valid", "valid", &CommError::MissingIsoData.to_string()));
        return report.finish(start);
    }
    if let Some(pair) = pair_or_fail(&mut report, &group, source, PSI_SURFACE_JSON) {
        common_checks(&mut report, &group, &pair);
        let test = group.parse("C").expect("word");
        if let Some(out) = gamma_output(&mut report, &group, &pair, &test) {
            let expected = group.parse(SURFACE_EXPECTED_OUTPUT).expect("expected word parses");
            let equal = group.words_equal(&out, &expected);
            report.push(Check::new(
                "gamma applied to C (equality in the surface group)",
                &group.format(&expected),
                &group.format(&out),
                equal,
            ));
            let differs = if group.is_trivial(&out.concat(&test.inverse())) { "equal" } else { "not equal" };
            report.push(Check::exact("output compared with input", "not equal", differs));
        }
    }
    report.finish(start)
}

/// Kernel membership of `γ` for `ρ: a ↦ a, b ↦ b²` on `BS(2,3)`.
pub fn kernel_check(budget: usize) -> ScenarioReport {
    let start = Instant::now();
    let g = GroupPresentation::bs_alphabet();
    let mut report = ScenarioReport::new("kernel-check");
    match bs_kernel_witness_check(budget) {
        Ok(k) => {
            report.push(Check::info("gamma", &g.format(&k.gamma)));
            report.push(Check::exact("gamma is a nonempty reduced word", "true", &(!k.gamma.is_empty()).to_string()));
            report.push(Check::exact(
                "rho(gamma)",
                "b^-2*a*b^2*a^-1*b^-2*a*b^2*a^-1*b^-2",
                &g.format(&k.rho_gamma),
            ));
            report.push(Check::exact("rho(gamma) normalized", "1", &g.format(&k.rho_gamma_normalized)));
            report.push(Check::exact(
                "length of normalized rho(gamma)",
                "0",
                &k.rho_gamma_normalized.len().to_string(),
            ));
            let nonempty = if k.gamma_normalized.is_empty() { "empty" } else { "nonempty" };
            report.push(Check::exact("gamma normalized", "nonempty", nonempty));
            report.push(Check::info("rewrite steps", &k.steps.to_string()));
        }
        Err(e) => report.push(Check::exact("normalization finishes", "finished", &e.to_string())),
    }
    report.finish(start)
}

fn verdict_text(v: &Result<Verdict, CommError>) -> String {
    match v {
        Ok(v) if v.trivial => "trivial".into(),
        Ok(_) => "nontrivial".into(),
        Err(e) => e.to_string(),
    }
}

/// Result of evaluating a commensurator word on a test element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvalOutput {
    pub word: String,
    pub test: String,
    pub image: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(String, String)>,
}

impl EvalOutput {
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.image);
        if let Some(v) = &self.verdict {
            s.push_str(v);
            s.push('\n');
        }
        if let Some((t, img)) = &self.witness {
            s.push_str(&format!("witness: {t} -> {img}\n"));
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// Errors of `eval`, split by exit status.
#[derive(Debug)]
pub enum EvalError {
    /// Unreadable or malformed input.
    Input(CommError),
    /// Evaluation left a domain.
    Failed(CommError),
}

impl std::fmt::Display for EvalError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EvalError::Input(e) | EvalError::Failed(e) => e.fmt(f),
        }
    }
}

/// Evaluates `word` (over the letters file's names) on `test`, applying
/// letters right to left; with `verdict`, also decides triviality.
pub fn eval(letters_file: &Path, word: &str, test: &str, verdict: bool) -> Result<EvalOutput, EvalError> {
    let file = LettersFile::load(letters_file).map_err(EvalError::Input)?;
    let group = file.group().map_err(EvalError::Input)?;
    let letters = file.build().map_err(EvalError::Input)?;
    let inst = CommWordProblemInstance::parse(letters, word).map_err(EvalError::Input)?;
    let test_word = group.parse(test).map_err(|e| EvalError::Input(e.into()))?;
    let image = sequential_evaluate(&inst, &test_word).map_err(EvalError::Failed)?;
    let (verdict, witness) = if verdict {
        let v = decide_comm_word(&inst, &group).map_err(EvalError::Failed)?;
        let witness = v.witness.as_ref().map(|(t, img)| (group.format(t), group.format(img)));
        (Some(if v.trivial { "trivial" } else { "nontrivial" }.to_string()), witness)
    } else {
        (None, None)
    };
    Ok(EvalOutput { word: inst.format_word(), test: group.format(&test_word), image: group.format(&image), verdict, witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demos_pass_with_shipped_data() {
        assert!(free_demo(PsiSource::Shipped).passed());
        assert!(kernel_check(crate::comm::DEFAULT_STEP_BUDGET).passed());
    }

    #[test]
    fn kernel_check_budget_failure() {
        assert!(!kernel_check(1).passed());
    }

    #[test]
    fn surface_requires_data() {
        assert!(!surface_demo(PsiSource::Auto).passed());
    }
}
