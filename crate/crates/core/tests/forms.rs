use std::path::Path;

use quartic::chains::CorollaryEquation;
use quartic::exactnum::rat;
use quartic::surfaces::SurfaceKind;
use quartic::varieties::{thm12_expand, DiagonalForm, Equation, FamilyWitness};

fn load(name: &str) -> DiagonalForm {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../forms").join(format!("{name}.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn forms_match_the_library() {
    for eq in Equation::ALL {
        assert_eq!(load(eq.id()), eq.form(), "{eq}");
    }
    let eqs = ["corollary_eq1", "corollary_eq2", "corollary_eq3"];
    for (name, eq) in eqs.into_iter().zip(CorollaryEquation::ALL) {
        assert_eq!(load(name), eq.form());
    }
    assert_eq!(load("surface21_n5"), SurfaceKind::Prop26.form(&rat(5, 1)));
    assert_eq!(load("surface38_n5"), SurfaceKind::Lemma27.form(&rat(5, 1)));
    assert_eq!(load("lemma28_s1"), SurfaceKind::Lemma28.form(&rat(1, 1)));
    assert_eq!(load("lemma28_s2"), SurfaceKind::Lemma28.form(&rat(2, 1)));
    let (form, _) = thm12_expand(&FamilyWitness::lemma28(&rat(1, 1)).unwrap()).unwrap();
    assert_eq!(load("thm12_s1"), form);
}

#[test]
fn printed_forms() {
    assert_eq!(load("eq19"), DiagonalForm::from_ints(&[1, 1, 4, -4, -1, 2]).unwrap());
    assert_eq!(load("eq20"), DiagonalForm::from_ints(&[1, 1, -2, -2, -2, -2]).unwrap());
}
