//! Data for the geometry of the dihedral case: relations of the Cox ring,
//! the torus action, the central fiber and its toric component.

pub const PHI02_NORMALIZED: &str = "2*z^3*(x2*x3 - x1*x4)";
pub const PHI02_OPPOSITE: &str = "2*z^3*(x1*x4 - x2*x3)";

/// Variables of the ambient `ℂ¹²`, also the Jacobian row order.
pub const WU_NAMES: [&str; 12] = ["w01", "w02", "w03", "w04", "w12", "w13", "w14", "w23", "w24", "w34", "u0", "u2"];

/// Generators of the ideal of `Spec R ⊂ ℂ¹²`, in the column order used for
/// the Jacobian minors.
pub const EMBEDDING_RELATIONS: [&str; 20] = [
    "w14*w23 + w13*w24 - w12*w34",
    "w04*w23 - w03*w24 - w02*w34",
    "w04*w13 + w03*w14 - w01*w34",
    "w04*w12 - w02*w14 - w01*w24",
    "w03*w12 + w02*w13 - w01*w23",
    "w02*w12*u2 - w03*w13 + w04*w14",
    "w01*w14 - w02*w24*u2 + w03*w34",
    "w01*w13 + w02*w23*u2 + w04*w34",
    "w01*w12 + w03*w23 + w04*w24",
    "w03*w04*u0 - w13*w14 + w23*w24*u2",
    "w02*w04*u0 + w12*w14 + w23*w34",
    "w01*w04*u0 + w12*w24*u2 + w13*w34",
    "w02*w03*u0 - w12*w13 - w24*w34",
    "w01*w03*u0 + w12*w23*u2 + w14*w34",
    "w01*w02*u0 + w13*w23 - w14*w24",
    "w02^2*u0 + w12^2 + w23^2 + w24^2",
    "w03^2*u0 + w13^2 + w23^2*u2 + w34^2",
    "w01^2 + w02^2*u2 + w03^2 + w04^2",
    "w04^2*u0 + w14^2 + w24^2*u2 + w34^2",
    "w01^2*u0 + w12^2*u2 + w13^2 + w14^2",
];

/// Linearization character.
pub const CHI: [i64; 2] = [2, 1];

/// Expected minimal supports of `χ`-semistable points.
pub fn semistable_supports() -> Vec<Vec<&'static str>> {
    let mut out: Vec<Vec<&str>> = ["w01", "w03", "w04"].iter().map(|w| vec![*w, "w02"]).collect();
    for a in ["w01", "w03", "w04"] {
        for b in ["w12", "w23", "w24"] {
            out.push(vec![a, b]);
        }
    }
    for s in &mut out {
        s.sort_unstable();
    }
    out.sort();
    out
}

/// A claimed monomial `6×6` Jacobian minor: 1-based rows (variables) and
/// columns (relations), coordinates set to zero first, and the variables
/// the monomial may involve.
#[derive(Clone, Debug)]
pub struct MinorClaim {
    pub rows: [usize; 6],
    pub cols: [usize; 6],
    pub zeroed: &'static [&'static str],
    pub support: &'static [&'static str],
}

pub const MINOR_CLAIMS: [MinorClaim; 6] = [
    MinorClaim { rows: [4, 6, 7, 9, 10, 11], cols: [2, 5, 6, 9, 16, 18], zeroed: &[], support: &["w02", "w04"] },
    MinorClaim { rows: [5, 6, 7, 10, 11, 12], cols: [2, 4, 5, 9, 16, 18], zeroed: &[], support: &["w01", "w02"] },
    MinorClaim { rows: [6, 7, 8, 10, 11, 12], cols: [2, 3, 5, 9, 16, 18], zeroed: &["w01", "w04"], support: &["w02", "w03"] },
    MinorClaim { rows: [1, 6, 7, 8, 9, 11], cols: [4, 5, 7, 8, 18, 20], zeroed: &["w02"], support: &["w01"] },
    MinorClaim { rows: [4, 5, 7, 9, 10, 11], cols: [4, 6, 8, 9, 18, 19], zeroed: &["w02", "w01"], support: &["w04"] },
    MinorClaim { rows: [3, 5, 7, 9, 10, 11], cols: [2, 3, 5, 7, 17, 18], zeroed: &["w02", "w01"], support: &["w03"] },
];

/// Claimed irreducible components of the preimage of `0 ∈ V/G`, with their
/// dimensions.
pub const COMPONENTS: [(&str, &[&str], usize); 4] = [
    ("Wu", &["w01", "w02", "w03", "w04", "w12", "w13", "w14", "w23", "w24", "w34"], 2),
    (
        "W02",
        &[
            "w01*w23 - w03*w12",
            "w03*w24 - w04*w23",
            "w04*w12 - w01*w24",
            "w01^2 + w03^2 + w04^2",
            "w12^2 + w23^2 + w24^2",
            "w01*w12 + w03*w23 + w04*w24",
            "w13",
            "w14",
            "w34",
            "u0",
            "u2",
        ],
        4,
    ),
    ("W0", &["w01", "w03", "w04", "w13", "w14", "w34", "u2", "w02^2*u0 + w12^2 + w23^2 + w24^2"], 4),
    ("W2", &["w12", "w23", "w24", "w13", "w14", "w34", "u0", "w02^2*u2 + w01^2 + w03^2 + w04^2"], 4),
];

/// Components expected to contain `χ`-stable points.
pub const STABLE_COMPONENTS: [&str; 2] = ["W02", "W2"];

/// The quadric cut out on the `ℙ²` chart `w02 ≠ 0` of `W2` by `W02`, in
/// coordinates `z_i = w0i`.
pub const PLANE_QUADRIC: &str = "z1^2 + z3^2 + z4^2";

/// Coordinates of `W02` viewed inside `ℂ⁷`.
pub const W02_COORDS: [&str; 7] = ["w02", "w01", "w03", "w04", "w12", "w23", "w24"];

/// Linear change of coordinates on `ℂ⁷` after which `W02` is binomial,
/// as `(new variable, expression in old variables)`.
pub const W02_SUBSTITUTION: [(&str, &str); 4] =
    [("w03", "-w03 - z^3*w04"), ("w04", "w03 - z^3*w04"), ("w23", "-w23 - z^3*w24"), ("w24", "w23 - z^3*w24")];

pub const W02_BINOMIALS: [&str; 6] =
    ["w01*w23 - w03*w12", "w03*w24 - w04*w23", "w04*w12 - w01*w24", "w01*w12 - w03*w24", "w01^2 - w03*w04", "w12^2 - w23*w24"];

/// Rays of the cone of the affine toric variety `W02`.
pub const W02_RAYS: [[i64; 4]; 5] = [[0, 1, 1, -1], [0, 1, 2, -1], [0, 0, 0, 1], [0, 1, 0, 1], [1, -1, -1, 1]];

/// Hilbert basis of the dual cone.
pub const W02_DUAL_HILBERT_BASIS: [[i64; 4]; 7] =
    [[1, 1, 0, 0], [1, 0, 1, 0], [1, 2, -1, 0], [1, 0, 0, 0], [0, 0, 1, 1], [0, -1, 2, 1], [0, 1, 0, 1]];

/// Unstable toric strata of `W02` (in the binomial coordinates) and the
/// rays spanning the corresponding faces.
pub const UNSTABLE_STRATA: [(&str, &[&str], &[[i64; 4]]); 2] = [
    ("Y1", &["w01", "w03", "w04", "w12^2 - w23*w24"], &[[0, 1, 1, -1]]),
    ("Y2", &["w02", "w12", "w23", "w24", "w01^2 - w03*w04"], &[[0, 0, 0, 1], [1, -1, -1, 1]]),
];

/// Characters of the Picard torus on the character lattice of `W02`.
pub const TORUS_CHARACTERS: [[i64; 4]; 2] = [[1, 0, 0, 0], [1, -1, -1, 2]];

/// Kernel basis of [`TORUS_CHARACTERS`], the map to the quotient lattice.
pub const QUOTIENT_PROJECTION: [[i64; 4]; 2] = [[0, -1, 1, 0], [0, 2, 0, 1]];

/// Ray list printed alongside the claim that the quotient is `𝔽4`.
pub const PRINTED_QUOTIENT_RAYS: [[i64; 2]; 4] = [[1, 1], [1, 0], [-1, 3], [-1, 0]];
