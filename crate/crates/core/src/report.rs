//! Serializable check outcomes shared by the CLI and the test suites.
//! Every boolean claim carries either a serialized witness or the dimensions
//! that back it; serialization order is fixed, so identical inputs produce
//! byte-identical reports.

use serde::Serialize;

use crate::algebras::{Extension, Side};
use crate::exact::Field;
use crate::frobenius::{self, FrobeniusVerdict};

/// The checks runnable against an algebra extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Dims,
    D2,
    Separability,
    HSeparability,
    Gamma,
    MMap,
    EndRt,
    Integrals,
    Pairings,
    RankOne,
    Frobenius,
    Projectivity,
    ConditionalExpectation,
}

impl CheckKind {
    pub fn parse(name: &str) -> Option<CheckKind> {
        Some(match name.trim().to_ascii_lowercase().as_str() {
            "dims" => CheckKind::Dims,
            "d2" => CheckKind::D2,
            "separability" => CheckKind::Separability,
            "h-separability" | "hseparability" => CheckKind::HSeparability,
            "gamma" => CheckKind::Gamma,
            "m-map" | "mmap" => CheckKind::MMap,
            "end-rt" | "endrt" => CheckKind::EndRt,
            "integrals" => CheckKind::Integrals,
            "pairings" => CheckKind::Pairings,
            "rank-one" | "rankone" => CheckKind::RankOne,
            "frobenius" => CheckKind::Frobenius,
            "projectivity" => CheckKind::Projectivity,
            "cond-exp" | "split" => CheckKind::ConditionalExpectation,
            _ => return None,
        })
    }

    pub const ALL: [CheckKind; 13] = [
        CheckKind::Dims,
        CheckKind::D2,
        CheckKind::Separability,
        CheckKind::HSeparability,
        CheckKind::Gamma,
        CheckKind::MMap,
        CheckKind::EndRt,
        CheckKind::Integrals,
        CheckKind::Pairings,
        CheckKind::RankOne,
        CheckKind::Frobenius,
        CheckKind::Projectivity,
        CheckKind::ConditionalExpectation,
    ];
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusDims {
    #[serde(rename = "A_hat")]
    pub a_hat: usize,
    pub casimir: usize,
    #[serde(rename = "R")]
    pub r: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusSystemExport {
    pub homomorphism: Vec<String>,
    pub x: Vec<String>,
    pub y: Vec<String>,
}

/// One serialized check result.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "check", rename_all = "kebab-case")]
pub enum CheckOutcome {
    Dims {
        dim_a: usize,
        dim_b: usize,
        dim_r: usize,
        dim_z: usize,
        dim_tensor_square: usize,
        dim_t: usize,
        dim_casimir: usize,
        dim_s: usize,
        dim_a_hat: usize,
    },
    D2 {
        left: bool,
        right: bool,
        is_d2: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        left_quasibase: Option<Vec<QuasibasePairExport>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        right_quasibase: Option<Vec<QuasibasePairExport>>,
    },
    Separability {
        separable: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        element: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness_in_t_prime: Option<bool>,
    },
    HSeparability {
        h_separable: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        system: Option<Vec<(String, String)>>,
    },
    Gamma {
        dim_r_tensor: usize,
        dim_a: usize,
        gamma_bijective: bool,
    },
    MMap {
        dim_t_tensor_a: usize,
        dim_tensor_square: usize,
        image_rank: usize,
        bijective: bool,
    },
    EndRt {
        dim_end_rt: usize,
        dim_z: usize,
        lambda_injective: bool,
    },
    Integrals {
        dim_left_integrals_in_s: usize,
        dim_right_integrals_in_t: usize,
        normalized_left_exists: bool,
        normalized_right_exists: bool,
    },
    Pairings {
        dim_im_psi: usize,
        dim_im_phi: usize,
        psi_surjective: bool,
        phi_surjective: bool,
        pure_witnesses_found: bool,
    },
    RankOne {
        dim_a_hat: usize,
        dim_casimir: usize,
        dim_r: usize,
        pass: bool,
    },
    Frobenius {
        frobenius: String,
        dims: FrobeniusDims,
        psi_surjective: bool,
        phi_surjective: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        reason: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        system: Option<FrobeniusSystemExport>,
    },
    Projectivity {
        projective: bool,
    },
    ConditionalExpectation {
        split: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        expectation_on_basis: Option<Vec<String>>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasibasePairExport {
    pub t: String,
    pub beta_on_basis: Vec<String>,
}

/// Pretty-printer for an element of A in terms of basis labels.
pub fn format_element<F: Field>(ext: &Extension<F>, v: &[F]) -> String {
    let labels = ext.algebra().labels();
    let mut parts = Vec::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_one() {
            parts.push(labels[i].clone());
        } else {
            parts.push(format!("({})*{}", c, labels[i]));
        }
    }
    if parts.is_empty() {
        "0".to_owned()
    } else {
        parts.join(" + ")
    }
}

/// Pretty-printer for a tensor in quotient coordinates via its section.
pub fn format_tensor<F: Field>(ext: &Extension<F>, q: &[F]) -> String {
    let labels = ext.algebra().labels();
    let mut parts = Vec::new();
    for (i, j, c) in ext.tensor_square().section_pairs(q) {
        if c.is_one() {
            parts.push(format!("{}(x){}", labels[i], labels[j]));
        } else {
            parts.push(format!("({})*{}(x){}", c, labels[i], labels[j]));
        }
    }
    if parts.is_empty() {
        "0".to_owned()
    } else {
        parts.join(" + ")
    }
}

fn format_endo_on_basis<F: Field>(ext: &Extension<F>, m: &crate::exact::Matrix<F>) -> Vec<String> {
    let d = ext.dim();
    (0..d)
        .map(|j| {
            let col: Vec<F> = (0..d).map(|i| m.get(i, j).clone()).collect();
            format!("{} -> {}", ext.algebra().labels()[j], format_element(ext, &col))
        })
        .collect()
}

/// Runs the requested checks against an extension and serializes the
/// outcomes in request order.
pub fn run_checks<F: Field>(ext: &Extension<F>, checks: &[CheckKind]) -> Vec<CheckOutcome> {
    checks.iter().map(|kind| run_check(ext, *kind)).collect()
}

pub fn run_check<F: Field>(ext: &Extension<F>, kind: CheckKind) -> CheckOutcome {
    match kind {
        CheckKind::Dims => CheckOutcome::Dims {
            dim_a: ext.dim(),
            dim_b: ext.dim_b(),
            dim_r: ext.r_basis().len(),
            dim_z: ext.z_basis().len(),
            dim_tensor_square: ext.tensor_square().dim(),
            dim_t: ext.t_space().len(),
            dim_casimir: ext.casimir_space().len(),
            dim_s: ext.s_space().len(),
            dim_a_hat: ext.a_hat_space().len(),
        },
        CheckKind::D2 => {
            let left = ext.d2_test(Side::Left);
            let right = ext.d2_test(Side::Right);
            let export = |cert: &crate::algebras::QuasibaseCertificate<F>| {
                cert.pairs
                    .iter()
                    .map(|(t, beta)| QuasibasePairExport {
                        t: format_tensor(ext, t),
                        beta_on_basis: format_endo_on_basis(ext, beta),
                    })
                    .collect::<Vec<_>>()
            };
            CheckOutcome::D2 {
                left: left.is_some(),
                right: right.is_some(),
                is_d2: left.is_some() && right.is_some(),
                left_quasibase: left.as_ref().map(export),
                right_quasibase: right.as_ref().map(export),
            }
        }
        CheckKind::Separability => {
            let element = ext.separability_element();
            CheckOutcome::Separability {
                separable: element.is_some(),
                element: element.as_ref().map(|e| format_tensor(ext, e)),
                witness_in_t_prime: element.as_ref().map(|e| ext.is_in_t_prime(e)),
            }
        }
        CheckKind::HSeparability => {
            let system = ext.h_separability_test();
            CheckOutcome::HSeparability {
                h_separable: system.is_some(),
                system: system.as_ref().map(|s| {
                    s.pairs
                        .iter()
                        .map(|(r, e)| (format_element(ext, r), format_tensor(ext, e)))
                        .collect()
                }),
            }
        }
        CheckKind::Gamma => {
            let g = ext.gamma_check();
            CheckOutcome::Gamma {
                dim_r_tensor: g.dim_r_tensor,
                dim_a: ext.dim(),
                gamma_bijective: g.gamma_bijective,
            }
        }
        CheckKind::MMap => {
            let m = ext.m_map_check();
            CheckOutcome::MMap {
                dim_t_tensor_a: m.dim_t_tensor_a,
                dim_tensor_square: ext.tensor_square().dim(),
                image_rank: m.image_rank,
                bijective: m.bijective,
            }
        }
        CheckKind::EndRt => {
            let r = ext.end_rt_check();
            CheckOutcome::EndRt {
                dim_end_rt: r.dim_end_rt,
                dim_z: r.dim_z,
                lambda_injective: r.lambda_injective,
            }
        }
        CheckKind::Integrals => {
            let spaces = ext.integral_spaces();
            CheckOutcome::Integrals {
                dim_left_integrals_in_s: spaces.left_in_s.len(),
                dim_right_integrals_in_t: spaces.right_in_t.len(),
                normalized_left_exists: spaces.normalized_left.is_some(),
                normalized_right_exists: spaces.normalized_right.is_some(),
            }
        }
        CheckKind::Pairings => {
            let p = frobenius::morita_pairings(ext);
            CheckOutcome::Pairings {
                dim_im_psi: p.dim_im_psi,
                dim_im_phi: p.dim_im_phi,
                psi_surjective: p.psi_surjective,
                phi_surjective: p.phi_surjective,
                pure_witnesses_found: p.psi_witness.is_some() && p.phi_witness.is_some(),
            }
        }
        CheckKind::RankOne => {
            let s = frobenius::rank_one_checks(ext);
            CheckOutcome::RankOne {
                dim_a_hat: s.dim_a_hat,
                dim_casimir: s.dim_casimir,
                dim_r: s.dim_r,
                pass: s.pass,
            }
        }
        CheckKind::Frobenius => {
            let screen = frobenius::rank_one_checks(ext);
            let pairings = frobenius::morita_pairings(ext);
            let dims = FrobeniusDims {
                a_hat: screen.dim_a_hat,
                casimir: screen.dim_casimir,
                r: screen.dim_r,
            };
            match frobenius::trace_ideal_frobenius_test(ext) {
                FrobeniusVerdict::Certified(sys) => CheckOutcome::Frobenius {
                    frobenius: "certified".into(),
                    dims,
                    psi_surjective: pairings.psi_surjective,
                    phi_surjective: pairings.phi_surjective,
                    reason: None,
                    system: Some(FrobeniusSystemExport {
                        homomorphism: format_endo_on_basis(ext, &sys.homomorphism),
                        x: sys.x.iter().map(|v| format_element(ext, v)).collect(),
                        y: sys.y.iter().map(|v| format_element(ext, v)).collect(),
                    }),
                },
                FrobeniusVerdict::NotFrobenius { reason } => CheckOutcome::Frobenius {
                    frobenius: "refuted".into(),
                    dims,
                    psi_surjective: pairings.psi_surjective,
                    phi_surjective: pairings.phi_surjective,
                    reason: Some(reason),
                    system: None,
                },
                FrobeniusVerdict::Inconclusive { reason } => CheckOutcome::Frobenius {
                    frobenius: "inconclusive".into(),
                    dims,
                    psi_surjective: pairings.psi_surjective,
                    phi_surjective: pairings.phi_surjective,
                    reason: Some(reason),
                    system: None,
                },
            }
        }
        CheckKind::Projectivity => {
            CheckOutcome::Projectivity { projective: ext.projectivity_test() }
        }
        CheckKind::ConditionalExpectation => {
            let e = frobenius::conditional_expectation(ext);
            CheckOutcome::ConditionalExpectation {
                split: e.is_some(),
                expectation_on_basis: e.as_ref().map(|m| format_endo_on_basis(ext, m)),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::triangular_extension_over_diagonal;
    use crate::exact::Rational;

    #[test]
    fn check_kinds_parse() {
        assert_eq!(CheckKind::parse("d2"), Some(CheckKind::D2));
        assert_eq!(CheckKind::parse("end-rt"), Some(CheckKind::EndRt));
        assert_eq!(CheckKind::parse("h-separability"), Some(CheckKind::HSeparability));
        assert_eq!(CheckKind::parse("bogus"), None);
    }

    #[test]
    fn triangular_report_values() {
        let ext = triangular_extension_over_diagonal::<Rational>(2);
        let outcomes = run_checks(&ext, &[CheckKind::D2, CheckKind::EndRt]);
        match &outcomes[0] {
            CheckOutcome::D2 { is_d2, .. } => assert!(!is_d2),
            _ => panic!("expected d2 outcome"),
        }
        match &outcomes[1] {
            CheckOutcome::EndRt { dim_end_rt, dim_z, .. } => {
                assert_eq!(*dim_end_rt, 2);
                assert_eq!(*dim_z, 1);
            }
            _ => panic!("expected end-rt outcome"),
        }
    }
}
