//! Named checks. Hopf checks need only `H`; module checks also read a
//! second document.

use hayd_core::ayd::{
    adjoint_yd_module, check_ayd, check_modular_pair, check_stability, check_yd, one_dim_module, trivial_module,
};
use hayd_core::double::{
    ah_coaction, ah_module_to_ayd, ah_unverified, ayd_to_ah_module, double_structure, double_unverified,
};
use hayd_core::entwining::{check_entwined_module, entwining_map};
use hayd_core::galois::{check_comodule_algebra, make_sayd_prop5, mu_module};
use hayd_core::hopf::verify_hopf_axioms;
use hayd_core::rep::{verify_action, verify_coaction, AlgebraModule};
use hayd_core::report::check_identity;
use hayd_core::{
    Case, ComoduleAlgebra, EntwiningKind, Error, Field, FinHopfAlgebra, GaloisData, Report, SparseVec,
    TwoSidedStructure,
};

/// Checks that take only a Hopf algebra, in suite order (sorted by name).
pub const HOPF_CHECKS: [&str; 15] = [
    "adjoint_yd",
    "ah_algebra",
    "ah_comodule_algebra",
    "ah_regular_round_trip",
    "ah_vs_double",
    "double_hopf_axioms",
    "entwining_ayd",
    "entwining_yd",
    "galois_stable_ayd",
    "hopf_axioms",
    "modular_pairs",
    "mu_yd",
    "regular_galois",
    "translation_map",
    "trivial_module",
];

/// Hopf checks that `--case` can restrict to a single case.
pub const CASE_CHECKS: [&str; 2] = ["adjoint_yd", "trivial_module"];

/// Checks on a `two_sided` document over `H`.
pub const MODULE_CHECKS: [&str; 5] = ["ayd", "entwined_ayd", "entwined_yd", "stability", "yd"];

/// Checks on a `comodule_algebra` document over `H`.
pub const COMODULE_ALGEBRA_CHECKS: [&str; 3] = ["comodule_algebra", "galois", "galois_stable_ayd"];

fn error_report<F: Field>(e: Error) -> Report<F> {
    Report { passed: false, axiom: format!("error: {e}"), witness: None, lhs: None, rhs: None }
}

fn flag<F: Field>(b: bool) -> SparseVec<F> {
    if b {
        SparseVec::basis(0)
    } else {
        SparseVec::zero()
    }
}

/// The first failing report, or the last passing one.
fn first_failure<F: Field>(reports: impl IntoIterator<Item = Report<F>>) -> Report<F> {
    let mut last = None;
    for r in reports {
        if !r.passed {
            return r;
        }
        last = Some(r);
    }
    last.unwrap_or_else(|| Report::pass("nothing to check"))
}

fn all_cases<F: Field>(per_case: impl Fn(Case) -> Report<F>) -> Report<F> {
    let mut last = Report::pass("all cases");
    for case in Case::ALL {
        let r = per_case(case);
        if !r.passed {
            return r;
        }
        last = r;
    }
    last.relabel("all cases")
}

fn galois_regular<F: Field>(h: &FinHopfAlgebra<F>) -> Result<GaloisData<F>, Error> {
    GaloisData::new(ComoduleAlgebra::regular(h))
}

fn stable_ayd<F: Field>(m: &TwoSidedStructure<F>) -> Report<F> {
    let r = check_ayd(m);
    if !r.passed {
        return r;
    }
    check_stability(m)
}

/// `None` if the check does not apply over this field (the group-like and
/// character searches need a finite field).
pub fn hopf_check<F: Field>(name: &str, h: &FinHopfAlgebra<F>) -> Option<Report<F>> {
    let r = match name {
        "hopf_axioms" => verify_hopf_axioms(&h.structure()).unwrap_or_else(error_report),
        "adjoint_yd" | "trivial_module" => all_cases(|c| case_check(name, h, c).expect("known check")),
        "entwining_ayd" => entwining_map(h, EntwiningKind::Ayd).verify(),
        "entwining_yd" => entwining_map(h, EntwiningKind::Yd).verify(),
        "modular_pairs" => {
            F::elements()?;
            return Some(modular_pairs(h).unwrap_or_else(error_report));
        }
        "regular_galois" => match galois_regular(h) {
            Ok(g) if g.is_galois() => Report::pass("canonical map bijective"),
            Ok(g) => Report::fail_bare("canonical map bijective", vec![g.can.rank()]),
            Err(e) => error_report(e),
        },
        "translation_map" => translation_map(h).unwrap_or_else(error_report),
        "galois_stable_ayd" => {
            make_sayd_prop5(&ComoduleAlgebra::regular(h)).map(|m| stable_ayd(&m)).unwrap_or_else(error_report)
        }
        "mu_yd" => galois_regular(h).and_then(|g| mu_module(&g)).map(|m| check_yd(&m)).unwrap_or_else(error_report),
        "ah_algebra" => ah_unverified(h).verify(),
        "double_hopf_axioms" => verify_hopf_axioms(&double_structure(h)).unwrap_or_else(error_report),
        "ah_comodule_algebra" => ah_comodule_algebra(h).unwrap_or_else(error_report),
        "ah_regular_round_trip" => ah_round_trip(h).unwrap_or_else(error_report),
        "ah_vs_double" => ah_vs_double(h),
        _ => return None,
    };
    Some(r)
}

/// The per-case checks behind `adjoint_yd` and `trivial_module`.
pub fn case_check<F: Field>(name: &str, h: &FinHopfAlgebra<F>, case: Case) -> Option<Report<F>> {
    match name {
        "adjoint_yd" => Some(check_yd(&adjoint_yd_module(h, case))),
        "trivial_module" => {
            let m = trivial_module(h, case);
            Some(first_failure([check_yd(&m), check_stability(&m)]))
        }
        _ => None,
    }
}

/// `check_modular_pair(δ, σ)` against stability and aYD of `^σk_δ`, for
/// every character `δ` and group-like `σ`. Witness: `(δ index, σ index)`.
fn modular_pairs<F: Field>(h: &FinHopfAlgebra<F>) -> Result<Report<F>, Error> {
    let chars = h.find_characters()?;
    let gls = h.find_group_likes()?;
    let mut err = None;
    let r = check_identity("modular pair iff stable aYD", &[chars.len(), gls.len()], &[1], |idx| {
        let (d, s) = (&chars[idx[0]], &gls[idx[1]]);
        let pair = check_modular_pair(h, d, s);
        let direct = match one_dim_module(h, d, s) {
            Ok(m) => check_ayd(&m).passed && check_stability(&m).passed,
            Err(e) => {
                err.get_or_insert(e);
                false
            }
        };
        (flag(pair), flag(direct))
    });
    match err {
        Some(e) => Err(e),
        None => Ok(r),
    }
}

/// `can(T(h)) = 1⊗h` for every basis vector `h`, with `P = H`.
fn translation_map<F: Field>(h: &FinHopfAlgebra<F>) -> Result<Report<F>, Error> {
    let g = galois_regular(h)?;
    let t = g.translation_map()?;
    let n = h.dim();
    Ok(check_identity("can(T(h)) = 1⊗h", &[n], &[n, n], |idx| {
        (g.can_apply(&t[idx[0]]), h.unit().outer(&SparseVec::basis(idx[0]), n))
    }))
}

fn ah_comodule_algebra<F: Field>(h: &FinHopfAlgebra<F>) -> Result<Report<F>, Error> {
    let d = FinHopfAlgebra::new(double_structure(h))?;
    check_comodule_algebra(&ah_unverified(h), &d, &ah_coaction(h))
}

/// Regular `A(H)`-module to an lr structure, which must be aYD, and back.
fn ah_round_trip<F: Field>(h: &FinHopfAlgebra<F>) -> Result<Report<F>, Error> {
    let ah = ah_unverified(h);
    let r = ah.verify();
    if !r.passed {
        return Ok(r);
    }
    let v = AlgebraModule::regular(ah.clone());
    let m = ah_module_to_ayd(h, &v)?;
    let r = first_failure([verify_action(h.algebra(), &m.action)?, verify_coaction(h, &m.coaction)?, check_ayd(&m)]);
    if !r.passed {
        return Ok(r);
    }
    let back = ayd_to_ah_module(&ah, &m)?;
    let n = ah.dim();
    Ok(check_identity("round trip", &[n, n], &[n], |idx| {
        (back.action.act(idx[0], idx[1]).clone(), v.action.act(idx[0], idx[1]).clone())
    }))
}

/// `A(H) = D(H)` exactly when `S² = id`. Witness: the first basis pair where
/// the products differ, or `[]` when they agree although `S² ≠ id`.
fn ah_vs_double<F: Field>(h: &FinHopfAlgebra<F>) -> Report<F> {
    let (a, d) = (ah_unverified(h), double_unverified(h));
    let n = a.dim();
    let involutive = h.antipode_is_involutive();
    let first_diff = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| a.mul_basis(i, j) != d.mul_basis(i, j));
    let axiom = "A(H) = D(H) iff S² = id";
    match (first_diff, involutive) {
        (None, true) | (Some(_), false) => Report::pass(axiom),
        (Some((i, j)), true) => Report::fail_bare(axiom, vec![i, j]),
        (None, false) => Report::fail_bare(axiom, vec![]),
    }
}

/// Verifies action and coaction before the named compatibility.
pub fn module_check<F: Field>(name: &str, m: &TwoSidedStructure<F>) -> Option<Report<F>> {
    let base = first_failure([
        verify_action(m.hopf.algebra(), &m.action).unwrap_or_else(error_report),
        verify_coaction(&m.hopf, &m.coaction).unwrap_or_else(error_report),
    ]);
    let r = match name {
        "ayd" => check_ayd(m),
        "yd" => check_yd(m),
        "stability" => check_stability(m),
        "entwined_ayd" | "entwined_yd" => {
            let kind = if name == "entwined_ayd" { EntwiningKind::Ayd } else { EntwiningKind::Yd };
            check_entwined_module(&entwining_map(&m.hopf, kind), &m.action, &m.coaction).unwrap_or_else(error_report)
        }
        _ => return None,
    };
    Some(if base.passed { r } else { base })
}

pub fn comodule_algebra_check<F: Field>(name: &str, p: &ComoduleAlgebra<F>) -> Option<Report<F>> {
    let base = first_failure([
        p.algebra.verify(),
        check_comodule_algebra(&p.algebra, &p.hopf, &p.coaction).unwrap_or_else(error_report),
    ]);
    let r = match name {
        "comodule_algebra" => base.clone(),
        "galois" => match GaloisData::new(p.clone()) {
            Ok(g) if g.is_galois() => Report::pass("canonical map bijective"),
            Ok(g) => Report::fail_bare("canonical map bijective", vec![g.can.rank()]),
            Err(e) => error_report(e),
        },
        "galois_stable_ayd" => make_sayd_prop5(p).map(|m| stable_ayd(&m)).unwrap_or_else(error_report),
        _ => return None,
    };
    Some(if base.passed { r } else { base })
}
