mod support;

use support::props;

#[test]
fn field_axioms() {
    props::field_axioms().unwrap();
}

#[test]
fn gb_determinism() {
    props::gb_determinism().unwrap();
}

#[test]
fn membership_soundness() {
    props::membership_soundness().unwrap();
}

#[test]
fn ideal_identities() {
    props::ideal_identities().unwrap();
}

#[test]
fn reynolds_idempotence() {
    props::reynolds_idempotence().unwrap();
}

#[test]
fn valuation_additivity() {
    props::valuation_additivity().unwrap();
}

#[test]
fn valuation_congruence() {
    props::valuation_congruence().unwrap();
}

#[test]
fn cone_double_duality() {
    props::cone_double_duality().unwrap();
}

#[test]
fn hilbert_basis_irreducible() {
    props::hilbert_basis_irreducible().unwrap();
}
