//! JSON report payloads. Every report travels in an [`Envelope`] that
//! records the producing tool, its version, and a SHA-256 digest of the
//! input it was computed from, so a report can be matched to its exact
//! input later. All element references are labels, never indices.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::analysis::{ClassificationReport, Verdict, Witness};
use crate::lattice::FiniteLattice;
use crate::search::{LawSuiteReport, SearchOutcome, SearchStatus};
use crate::tnorm::{ContinuityReport, OpTable, VerificationReport};

#[derive(Debug, Serialize)]
pub struct Envelope<R: Serialize> {
    pub format: u32,
    pub tool: String,
    pub version: String,
    pub input_sha256: String,
    pub kind: String,
    pub report: R,
}

pub fn envelope<R: Serialize>(kind: &str, input: &[u8], report: R) -> Envelope<R> {
    let mut hasher = Sha256::new();
    hasher.update(input);
    let digest = hasher.finalize();
    let input_sha256 = digest.iter().map(|b| format!("{b:02x}")).collect();
    Envelope {
        format: 1,
        tool: "latnorm".to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        input_sha256,
        kind: kind.to_string(),
        report,
    }
}

#[derive(Debug, Serialize)]
pub struct WitnessDto {
    pub law: String,
    pub elements: Vec<String>,
    pub note: String,
}

pub fn witness_dto(l: &FiniteLattice, w: &Witness) -> WitnessDto {
    WitnessDto {
        law: w.law.to_string(),
        elements: w.elements.iter().map(|&x| l.label(x).to_string()).collect(),
        note: w.note.clone(),
    }
}

#[derive(Debug, Serialize)]
pub struct VerdictDto {
    pub holds: bool,
    pub witness: Option<WitnessDto>,
}

pub fn verdict_dto(l: &FiniteLattice, v: &Verdict) -> VerdictDto {
    VerdictDto {
        holds: v.holds,
        witness: v.witness.as_ref().map(|w| witness_dto(l, w)),
    }
}

#[derive(Debug, Serialize)]
pub struct ClassificationDto {
    pub n: usize,
    pub bottom: String,
    pub top: String,
    pub atoms: Vec<String>,
    pub join_irreducible: Vec<String>,
    pub meet_irreducible: Vec<String>,
    pub doubly_irreducible: Vec<String>,
    pub one_distributive_elements: Vec<String>,
    pub modular: VerdictDto,
    pub distributive: VerdictDto,
    pub one_distributive: VerdictDto,
    pub atomistic: VerdictDto,
    pub boolean: VerdictDto,
    pub complemented: VerdictDto,
    pub rectangular: Option<(String, String)>,
    pub forbidden_1_sublattice: Option<WitnessDto>,
}

pub fn classification_dto(l: &FiniteLattice, r: &ClassificationReport) -> ClassificationDto {
    let names = |xs: &[usize]| xs.iter().map(|&x| l.label(x).to_string()).collect();
    ClassificationDto {
        n: l.n(),
        bottom: l.label(l.bottom()).to_string(),
        top: l.label(l.top()).to_string(),
        atoms: names(&r.classes.atoms),
        join_irreducible: names(&r.classes.join_irr),
        meet_irreducible: names(&r.classes.meet_irr),
        doubly_irreducible: names(&r.classes.bi_irr),
        one_distributive_elements: names(&r.one_distributive_elements),
        modular: verdict_dto(l, &r.modular),
        distributive: verdict_dto(l, &r.distributive),
        one_distributive: verdict_dto(l, &r.one_distributive),
        atomistic: verdict_dto(l, &r.atomistic),
        boolean: verdict_dto(l, &r.boolean),
        complemented: verdict_dto(l, &r.complemented),
        rectangular: r
            .rectangular
            .map(|(a, b)| (l.label(a).to_string(), l.label(b).to_string())),
        forbidden_1_sublattice: r.forbidden_1_sublattice.as_ref().map(|w| witness_dto(l, w)),
    }
}

#[derive(Debug, Serialize)]
pub struct VerificationDto {
    pub boundary: VerdictDto,
    pub monotone: VerdictDto,
    pub commutative: VerdictDto,
    pub below_meet: VerdictDto,
    pub neutral: Option<VerdictDto>,
    pub associative: Option<VerdictDto>,
    pub all_pass: bool,
}

pub fn verification_dto(l: &FiniteLattice, r: &VerificationReport) -> VerificationDto {
    VerificationDto {
        boundary: verdict_dto(l, &r.boundary),
        monotone: verdict_dto(l, &r.monotone),
        commutative: verdict_dto(l, &r.commutative),
        below_meet: verdict_dto(l, &r.below_meet),
        neutral: r.neutral.as_ref().map(|v| verdict_dto(l, v)),
        associative: r.associative.as_ref().map(|v| verdict_dto(l, v)),
        all_pass: r.all_pass(),
    }
}

#[derive(Debug, Serialize)]
pub struct ContinuityDto {
    pub pairwise: VerdictDto,
    pub subset: Option<VerdictDto>,
    pub holds: bool,
}

pub fn continuity_dto(l: &FiniteLattice, r: &ContinuityReport) -> ContinuityDto {
    ContinuityDto {
        pairwise: verdict_dto(l, &r.pairwise),
        subset: r.subset.as_ref().map(|v| verdict_dto(l, v)),
        holds: r.holds(),
    }
}

pub fn table_rows(l: &FiniteLattice, t: &OpTable) -> Vec<Vec<String>> {
    l.elements()
        .map(|x| {
            l.elements()
                .map(|y| l.label(t.get(x, y)).to_string())
                .collect()
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct SearchDto {
    pub status: String,
    pub nodes_explored: u64,
    pub solutions: usize,
    pub first_solution: Option<Vec<Vec<String>>>,
}

pub fn search_dto(l: &FiniteLattice, out: &SearchOutcome) -> SearchDto {
    SearchDto {
        status: match out.status {
            SearchStatus::Found => "found",
            SearchStatus::ExhaustedNone => "exhausted-none",
            SearchStatus::BudgetExceeded => "budget-exceeded",
        }
        .to_string(),
        nodes_explored: out.nodes_explored,
        solutions: out.solutions.len(),
        first_solution: out.solutions.first().map(|t| table_rows(l, t)),
    }
}

#[derive(Debug, Serialize)]
pub struct LawRowDto {
    pub name: String,
    pub n: usize,
    pub modular: bool,
    pub distributive: bool,
    pub one_distributive: bool,
    pub atomistic: bool,
    pub boolean: bool,
    pub rectangular: bool,
    pub forbidden: Option<String>,
    pub pseudo_found: Option<bool>,
    pub tnorm_found: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct PairCheckDto {
    pub lower: String,
    pub upper: String,
    pub ordinal_has_lc_tnorm: Option<bool>,
    pub upper_has_lc_tnorm: Option<bool>,
    pub glued_one_distributive: bool,
    pub ordinal_one_distributive: bool,
    pub upper_one_distributive: bool,
}

#[derive(Debug, Serialize)]
pub struct LawSuiteDto {
    pub rows: Vec<LawRowDto>,
    pub pair_checks: Vec<PairCheckDto>,
    pub counterexamples: Vec<String>,
    pub converse_witness: Option<String>,
}

pub fn law_suite_dto(r: &LawSuiteReport) -> LawSuiteDto {
    LawSuiteDto {
        rows: r
            .rows
            .iter()
            .map(|row| LawRowDto {
                name: row.name.clone(),
                n: row.n,
                modular: row.modular,
                distributive: row.distributive,
                one_distributive: row.one_distributive,
                atomistic: row.atomistic,
                boolean: row.boolean,
                rectangular: row.rectangular,
                forbidden: row.forbidden.clone(),
                pseudo_found: row.pseudo_found,
                tnorm_found: row.tnorm_found,
            })
            .collect(),
        pair_checks: r
            .pair_checks
            .iter()
            .map(|p| PairCheckDto {
                lower: p.lower.clone(),
                upper: p.upper.clone(),
                ordinal_has_lc_tnorm: p.ordinal_has_lc_tnorm,
                upper_has_lc_tnorm: p.upper_has_lc_tnorm,
                glued_one_distributive: p.glued_one_distributive,
                ordinal_one_distributive: p.ordinal_one_distributive,
                upper_one_distributive: p.upper_one_distributive,
            })
            .collect(),
        counterexamples: r.counterexamples.clone(),
        converse_witness: r.converse_witness.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::classify;

    #[test]
    fn envelope_pins_the_input_digest() {
        let e = envelope("demo", b"abc", 7u32);
        assert_eq!(e.format, 1);
        assert_eq!(e.tool, "latnorm");
        assert_eq!(
            e.input_sha256,
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
        let json = serde_json::to_value(&e).unwrap();
        assert_eq!(json["report"], 7);
        assert_eq!(json["kind"], "demo");
    }

    #[test]
    fn classification_speaks_in_labels() {
        let l = FiniteLattice::boolean_lattice(2);
        let dto = classification_dto(&l, &classify(&l));
        assert_eq!(dto.bottom, "00");
        assert_eq!(dto.atoms, vec!["01", "10"]);
        assert!(dto.boolean.holds);
        let json = serde_json::to_string(&dto).unwrap();
        assert!(json.contains("\"join_irreducible\""));
    }
}
