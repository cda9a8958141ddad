//! Reference values computed at 50 significant digits from the matrix
//! exponential of the generators, truncated to f64.

#![allow(clippy::excessive_precision)]

use finsler_core::boost::{
    add_velocities, boost_matrix, compose, dilation_from_params, generalized_boost_matrix,
    params_from_velocity, velocity_from_params,
};
use finsler_core::spinor::{
    bispinor_matrix, bispinor_transform, finsler_bispinor_invariant, scalar_density, spinor_boost,
    vector_current,
};
use finsler_core::velocity_space::{cylinder_level, horosphere_level, lobachevsky_distance};
use finsler_core::{
    finsler_interval_sq, minkowski_interval, AnisotropySpec, Bispinor, BoostParams, FourVector,
    Matrix4, SpinorMatrix, Tolerance, UnitVector3, Vec3, Velocity3,
};

const LAMBDA: [[f64; 4]; 4] = [
    [
        1.8687701367781996,
        -0.94787409262149878,
        -0.25003806767108362,
        -1.237464138214232,
    ],
    [
        -0.88352074915644696,
        1.0750789007092271,
        0.69872784060909223,
        0.36958581709470944,
    ],
    [
        1.1657354885600565,
        -0.82743452753919588,
        0.4422710233028842,
        -1.2160130237258814,
    ],
    [
        -0.59393070356371375,
        -0.2408791301646058,
        0.61538181805206436,
        0.95709777102329878,
    ],
];

const DLAMBDA: [[f64; 4]; 4] = [
    [
        1.5266233129290963,
        -0.77433102072801393,
        -0.20425944085584671,
        -1.0109010012159554,
    ],
    [
        -0.72175991395291582,
        0.87824632936955297,
        0.57080011600862262,
        0.3019195958885864,
    ],
    [
        0.95230490819631158,
        -0.67594232955881883,
        0.36129711274775495,
        -0.99337729895758936,
    ],
    [
        -0.48518993346497435,
        -0.19677738233839019,
        0.50271363572334039,
        0.78186596694853978,
    ],
];

const SPINOR: [[[f64; 2]; 4]; 4] = [
    [
        [1.0420194134244344, 0.36615497477460455],
        [-0.14646198990984182, -0.43938596972952546],
        [-0.43938596972952546, 0.0],
        [-0.43938596972952546, -0.21969298486476273],
    ],
    [
        [0.14646198990984182, -0.43938596972952546],
        [1.0420194134244344, -0.36615497477460455],
        [-0.43938596972952546, 0.21969298486476273],
        [0.43938596972952546, 0.0],
    ],
    [
        [-0.43938596972952546, 0.0],
        [-0.43938596972952546, -0.21969298486476273],
        [1.0420194134244344, 0.36615497477460455],
        [-0.14646198990984182, -0.43938596972952546],
    ],
    [
        [-0.43938596972952546, 0.21969298486476273],
        [0.43938596972952546, 0.0],
        [0.14646198990984182, -0.43938596972952546],
        [1.0420194134244344, -0.36615497477460455],
    ],
];

const BISPINOR_MATRIX: [[[f64; 2]; 4]; 4] = [
    [
        [1.4112755028371392, 0.49590779162467459],
        [-0.19836311664986983, -0.5950893499496095],
        [-0.5950893499496095, 0.0],
        [-0.5950893499496095, -0.29754467497480475],
    ],
    [
        [0.19836311664986983, -0.5950893499496095],
        [1.4112755028371392, -0.49590779162467459],
        [-0.5950893499496095, 0.29754467497480475],
        [0.5950893499496095, 0.0],
    ],
    [
        [-0.5950893499496095, 0.0],
        [-0.5950893499496095, -0.29754467497480475],
        [1.4112755028371392, 0.49590779162467459],
        [-0.19836311664986983, -0.5950893499496095],
    ],
    [
        [-0.5950893499496095, 0.29754467497480475],
        [0.5950893499496095, 0.0],
        [0.19836311664986983, -0.5950893499496095],
        [1.4112755028371392, -0.49590779162467459],
    ],
];

const V: [f64; 3] = [
    0.50721812916791058,
    0.13379819312724822,
    0.66218103225239199,
];
const V2: [f64; 3] = [
    0.31924764243298909,
    0.16343425012912539,
    -0.5491573019761538,
];
const V_COMPOSED: [f64; 3] = [
    0.78826315320551288,
    0.12694437652003643,
    0.38620585669555993,
];

fn nu() -> UnitVector3 {
    UnitVector3::normalize(Vec3::new(1.0, 2.0, 2.0)).unwrap()
}

fn params() -> BoostParams {
    BoostParams::new(
        UnitVector3::normalize(Vec3::new(2.0, -1.0, 2.0)).unwrap(),
        1.3,
    )
    .unwrap()
}

fn second() -> BoostParams {
    BoostParams::new(
        UnitVector3::normalize(Vec3::new(-1.0, 0.0, 3.0)).unwrap(),
        -0.8,
    )
    .unwrap()
}

fn spec() -> AnisotropySpec {
    AnisotropySpec::new(nu(), 0.35).unwrap()
}

fn spinor_from(pairs: [[[f64; 2]; 4]; 4]) -> SpinorMatrix {
    SpinorMatrix(pairs.map(|row| row.map(|[re, im]| num_complex::Complex64::new(re, im))))
}

fn vel(a: [f64; 3]) -> Velocity3 {
    Velocity3::try_from(a).unwrap()
}

#[test]
fn boost_matrix_matches_reference() {
    let tol = Tolerance::default();
    let m = boost_matrix(nu(), &params(), &tol);
    assert!(m.max_abs_diff(&Matrix4(LAMBDA)) < 1e-14, "{m:?}");
}

#[test]
fn generalized_boost_matches_reference() {
    let tol = Tolerance::default();
    let m = generalized_boost_matrix(&spec(), &params(), &tol);
    assert!(m.max_abs_diff(&Matrix4(DLAMBDA)) < 1e-14);
    assert!((dilation_from_params(&spec(), &params()) - 0.81691337146527185).abs() < 1e-15);
}

#[test]
fn velocity_matches_reference() {
    let tol = Tolerance::default();
    let v = velocity_from_params(nu(), &params(), &tol).unwrap();
    assert!(v.vec().max_abs_diff(Vec3::from(V)) < 1e-15);
    let back = params_from_velocity(nu(), &vel(V), &tol).unwrap();
    assert!((back.alpha - 1.3).abs() < 1e-14);
    assert!(back.n.vec().max_abs_diff(params().n.vec()) < 1e-14);
}

#[test]
fn composition_matches_reference() {
    let tol = Tolerance::default();
    let g = compose(nu(), &params(), &second(), &tol).unwrap();
    let v = velocity_from_params(nu(), &g, &tol).unwrap();
    assert!(v.vec().max_abs_diff(Vec3::from(V_COMPOSED)) < 1e-14);
    assert!((g.axial_rapidity(nu()) - 0.15614075642199387).abs() < 1e-15);
    let sum = add_velocities(nu(), &vel(V), &vel(V2)).unwrap();
    assert!(sum.vec().max_abs_diff(Vec3::from(V_COMPOSED)) < 1e-14);
}

#[test]
fn finsler_interval_matches_reference() {
    let dx = FourVector::new(2.0, 0.3, -0.5, 0.7);
    assert!((minkowski_interval(dx) - 3.17).abs() < 1e-15);
    let f = finsler_interval_sq(dx, &spec()).unwrap();
    assert!((f - 3.1528023884117729).abs() < 1e-14);
}

#[test]
fn spinor_boost_matches_reference() {
    let s = spinor_boost(nu(), &params(), &Tolerance::default());
    assert!(s.max_abs_diff(&spinor_from(SPINOR)) < 1e-14);
}

#[test]
fn bispinor_matrix_matches_reference() {
    let m = bispinor_matrix(&spec(), &vel(V));
    assert!(m.max_abs_diff(&spinor_from(BISPINOR_MATRIX)) < 1e-13);
}

#[test]
fn bispinor_bilinears_match_reference() {
    let tol = Tolerance::default();
    let psi = Bispinor::from_pairs([[0.3, -0.1], [0.8, 0.2], [-0.4, 0.5], [0.1, 0.3]]);
    assert!((scalar_density(&psi) - 0.27).abs() < 1e-15);
    let j = vector_current(&psi);
    for (a, b) in j.iter().zip([1.29, -0.44, -0.76, -0.62]) {
        assert!((a - b).abs() < 1e-15);
    }
    let out = bispinor_transform(&spec(), &vel(V), &psi);
    let expected = Bispinor::from_pairs([
        [0.70109101416095954, -1.0139252635431412],
        [1.3769742980820487, -0.55086998936202546],
        [-1.2488629535769066, 0.090712089803973134],
        [0.83539845855825834, 0.97879937747077731],
    ]);
    assert!(out.max_abs_diff(&expected) < 1e-13);
    let inv = 0.027757647067028924;
    assert!((finsler_bispinor_invariant(&spec(), &psi, &tol).unwrap() - inv).abs() < 1e-15);
    assert!((finsler_bispinor_invariant(&spec(), &out, &tol).unwrap() - inv).abs() < 1e-14);
}

#[test]
fn velocity_space_matches_reference() {
    let w1 = vel([0.3, -0.2, 0.5]);
    let w2 = vel([-0.6, 0.1, 0.4]);
    assert!((lobachevsky_distance(&w1, &w2) - 1.2272637621172586).abs() < 1e-14);
    assert!((horosphere_level(nu(), &w1) - 0.8890008890013335).abs() < 1e-15);
    assert!((cylinder_level(nu(), &w1) - 0.46774193548387097).abs() < 1e-15);
}
