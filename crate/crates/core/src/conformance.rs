//! Seeded randomized property suites.
//!
//! Each suite draws from its own ChaCha8 stream (`seed`, stream = suite
//! index), so reports are reproducible bit for bit and independent of the
//! order or parallelism in which suites run.
//!
//! Sampling: directions uniform on the sphere, `alpha` uniform in `[-3, 3]`,
//! `r` uniform in `[-0.9, 0.9]`, speeds with rapidity uniform in `[0, 3]`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::boost::{
    add_velocities, add_velocity_vectors, boost_matrix, compose, dilation_factor,
    dilation_from_params, generalized_boost_matrix, generalized_generator, generator,
    params_from_velocity, velocity_from_params, BoostParams,
};
use crate::error::Result;
use crate::matrix::Matrix4;
use crate::metric::{finsler_interval_sq, minkowski_interval, AnisotropySpec};
use crate::oracle::{expm_complex, expm_real, inverse_complex};
use crate::spinor::{
    bispinor_matrix, bispinor_transform, dirac_adjoint, finsler_bispinor_invariant, gamma_basis,
    scalar_density, spinor_boost, spinor_generator, vector_current, Bispinor, SpinorMatrix,
};
use crate::subgroups::{
    abelian_params_from_velocity, abelian_transform, abelian_transform_v, abelian_velocity,
    axial_invariants, axial_transform, axial_transform_inverse, axial_velocity, AbelianParams,
    AxialParams,
};
use crate::tolerance::Tolerance;
use crate::vector::{FourVector, UnitVector3, Vec3, Velocity3};
use crate::velocity_space::{
    cylinder_level, horosphere_level, induced_motion, lobachevsky_distance,
};

/// Suite names in execution and report order.
pub const SUITES: [&str; 11] = [
    "oracle",
    "closure",
    "metric",
    "roundtrip",
    "addition",
    "spinor",
    "bispinor",
    "invariant",
    "subgroups",
    "velocity_space",
    "continuity",
];

/// Default sample count per suite.
pub const DEFAULT_SAMPLES: usize = 1000;

/// Random draws following the documented distributions.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..=hi)
    }

    /// Uniform on the unit sphere.
    pub fn direction(&mut self) -> UnitVector3 {
        let z: f64 = self.uniform(-1.0, 1.0);
        let phi = self.uniform(0.0, TAU);
        let rho = (1.0 - z * z).max(0.0).sqrt();
        UnitVector3::normalize(Vec3::new(rho * phi.cos(), rho * phi.sin(), z))
            .expect("sphere sample is nonzero")
    }

    /// Uniform direction in the plane orthogonal to `nu`.
    pub fn perpendicular(&mut self, nu: UnitVector3) -> UnitVector3 {
        let (e1, e2) = nu.orthonormal_pair();
        let phi = self.uniform(0.0, TAU);
        UnitVector3::normalize(e1.vec() * phi.cos() + e2.vec() * phi.sin())
            .expect("circle sample is nonzero")
    }

    pub fn alpha(&mut self) -> f64 {
        self.uniform(-3.0, 3.0)
    }

    pub fn r(&mut self) -> f64 {
        self.uniform(-0.9, 0.9)
    }

    pub fn params(&mut self) -> BoostParams {
        let n = self.direction();
        BoostParams::new(n, self.alpha()).expect("finite alpha")
    }

    pub fn spec(&mut self) -> AnisotropySpec {
        let nu = self.direction();
        AnisotropySpec::new(nu, self.r()).expect("finite r")
    }

    pub fn velocity(&mut self) -> Velocity3 {
        let dir = self.direction();
        let eta = self.uniform(0.0, 3.0);
        Velocity3::from_rapidity(dir, eta).expect("rapidity below saturation")
    }

    /// Future-directed timelike displacement with proper time in `[0.1, 2]`
    /// and rapidity in `[0, 2]`.
    pub fn timelike(&mut self) -> FourVector {
        let tau = self.uniform(0.1, 2.0);
        let eta = self.uniform(0.0, 2.0);
        let dir = self.direction();
        FourVector::from_parts(tau * eta.cosh(), dir.vec() * (tau * eta.sinh()))
    }

    /// Components uniform in `[-1, 1]`.
    pub fn event(&mut self) -> FourVector {
        FourVector::new(
            self.uniform(-1.0, 1.0),
            self.uniform(-1.0, 1.0),
            self.uniform(-1.0, 1.0),
            self.uniform(-1.0, 1.0),
        )
    }

    /// Bispinor with components uniform in the unit square, conditioned on
    /// `|psibar psi| > min_density`.
    pub fn bispinor(&mut self, min_density: f64) -> Bispinor {
        loop {
            let psi = Bispinor(std::array::from_fn(|_| {
                Complex64::new(self.uniform(-1.0, 1.0), self.uniform(-1.0, 1.0))
            }));
            if scalar_density(&psi).abs() > min_density {
                return psi;
            }
        }
    }
}

/// Worst observed deviation of one property against its threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub name: String,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub samples: usize,
    pub passed: bool,
    pub properties: Vec<PropertyResult>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub seed: u64,
    pub samples: usize,
    /// True when no samples were drawn; such a run passes trivially.
    pub vacuous: bool,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

/// Accumulates per-property maxima. A library error counts as an infinite
/// deviation.
struct Tracker {
    props: Vec<PropertyResult>,
}

impl Tracker {
    fn new() -> Self {
        Tracker { props: Vec::new() }
    }

    fn observe(&mut self, name: &str, tolerance: f64, deviation: f64) {
        let deviation = if deviation.is_nan() {
            f64::INFINITY
        } else {
            deviation
        };
        match self.props.iter_mut().find(|p| p.name == name) {
            Some(p) => p.max_deviation = p.max_deviation.max(deviation),
            None => self.props.push(PropertyResult {
                name: name.to_string(),
                max_deviation: deviation,
                tolerance,
                passed: true,
            }),
        }
    }

    fn observe_result(&mut self, name: &str, tolerance: f64, deviation: Result<f64>) {
        self.observe(name, tolerance, deviation.unwrap_or(f64::INFINITY));
    }

    fn finish(mut self, suite: &str, samples: usize) -> SuiteReport {
        for p in &mut self.props {
            p.passed = p.max_deviation <= p.tolerance;
        }
        SuiteReport {
            suite: suite.to_string(),
            samples,
            passed: self.props.iter().all(|p| p.passed),
            properties: self.props,
        }
    }
}

/// `|a - b| / |b|`, falling back to absolute near zero.
pub fn rel_dev(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// `|a - b| / max(1, |b|)`
pub fn scaled_dev(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

fn gamma_combination(lambda: &Matrix4, row: usize) -> SpinorMatrix {
    let basis = gamma_basis();
    (0..4).fold(SpinorMatrix::zero(), |acc, m| {
        acc + basis.gamma[m].scale_real(lambda.0[row][m])
    })
}

/// Worst entrywise deviation of `S^-1 gamma^n S` from `Lambda^n_m gamma^m`.
pub fn intertwining_residual(s: &SpinorMatrix, lambda: &Matrix4) -> f64 {
    let Some(s_inv) = inverse_complex(s) else {
        return f64::INFINITY;
    };
    let basis = gamma_basis();
    (0..4)
        .map(|n| (s_inv * basis.gamma[n] * *s).max_abs_diff(&gamma_combination(lambda, n)))
        .fold(0.0, f64::max)
}

fn suite_oracle(s: &mut Sampler, samples: usize, tol: &Tolerance) -> Tracker {
    let mut t = Tracker::new();
    for _ in 0..samples {
        let spec = s.spec();
        let n = s.direction();
        let alpha = s.alpha();
        let params = BoostParams::new(n, alpha).unwrap();
        let lam = boost_matrix(spec.nu, &params, tol);
        let oracle = expm_real(&generator(spec.nu, n).0.scale(alpha));
        t.observe("boost_vs_expm", 1e-10, lam.max_abs_diff(&oracle));
        let glam = generalized_boost_matrix(&spec, &params, tol);
        let goracle = expm_real(&generalized_generator(&spec, n).scale(alpha));
        t.observe(
            "generalized_boost_vs_expm",
            1e-10,
            glam.max_abs_diff(&goracle),
        );
        t.observe("det_boost", 1e-10, (lam.det() - 1.0).abs());
        let d = dilation_from_params(&spec, &params);
        t.observe(
            "det_generalized_boost",
            1e-10,
            rel_dev(glam.det(), d.powi(4)),
        );
    }
    t
}

fn suite_closure(s: &mut Sampler, samples: usize, tol: &Tolerance) -> Tracker {
    let mut t = Tracker::new();
    for _ in 0..samples {
        let nu = s.direction();
        let (g1, g2, g3) = (s.params(), s.params(), s.params());
        let Ok(g21) = compose(nu, &g1, &g2, tol) else {
            t.observe("closure", 1e-10, f64::INFINITY);
            continue;
        };
        let product = boost_matrix(nu, &g2, tol) * boost_matrix(nu, &g1, tol);
        t.observe(
            "closure",
            1e-10,
            boost_matrix(nu, &g21, tol).max_abs_diff(&product),
        );
        let sum = g1.axial_rapidity(nu) + g2.axial_rapidity(nu);
        t.observe("additivity", 1e-12, (g21.axial_rapidity(nu) - sum).abs());
        let assoc = (|| {
            let left = compose(nu, &g21, &g3, tol)?;
            let right = compose(nu, &g1, &compose(nu, &g2, &g3, tol)?, tol)?;
            Ok(boost_matrix(nu, &left, tol).max_abs_diff(&boost_matrix(nu, &right, tol)))
        })();
        t.observe_result("associativity", 1e-10, assoc);
    }
    t
}

fn suite_metric(s: &mut Sampler, samples: usize, tol: &Tolerance) -> Tracker {
    let mut t = Tracker::new();
    for _ in 0..samples {
        let spec = s.spec();
        let params = s.params();
        let dx = s.timelike();
        let m = generalized_boost_matrix(&spec, &params, tol);
        let dev: Result<_> = (|| {
            let before = finsler_interval_sq(dx, &spec)?;
            Ok(rel_dev(finsler_interval_sq(m * dx, &spec)?, before))
        })();
        t.observe_result("finsler_invariance", 1e-10, dev);

        let flat = AnisotropySpec::minkowski(spec.nu);
        let lam = boost_matrix(spec.nu, &params, tol);
        t.observe(
            "minkowski_invariance",
            1e-10,
            rel_dev(minkowski_interval(lam * dx), minkowski_interval(dx)),
        );
        t.observe_result(
            "r0_reduces_to_minkowski",
            1e-12,
            finsler_interval_sq(dx, &flat).map(|f| rel_dev(f, minkowski_interval(dx))),
        );

        let k = s.uniform(0.1, 10.0);
        let homog = (|| {
            Ok(rel_dev(
                finsler_interval_sq(dx.scale(k), &spec)?,
                k * k * finsler_interval_sq(dx, &spec)?,
            ))
        })();
        t.observe_result("homogeneity", 1e-10, homog);

        // common rotation of dx and nu: the rotated interval is the same
        let axis = s.direction();
        let angle = s.uniform(0.0, TAU);
        let rot = crate::boost::axial_rotation(axis, angle);
        let rot_nu =
            UnitVector3::normalize((rot * FourVector::from_parts(0.0, spec.nu.vec())).spatial());
        let dev: Result<_> = (|| {
            let rotated = AnisotropySpec::new(rot_nu?, spec.r)?;
            Ok(rel_dev(
                finsler_interval_sq(rot * dx, &rotated)?,
                finsler_interval_sq(dx, &spec)?,
            ))
        })();
        t.observe_result("rotation_invariance", 1e-10, dev);
    }
    t
}

/// Boost parameters with `|nu.n alpha| < bound`.
pub fn near_degenerate_params(s: &mut Sampler, nu: UnitVector3, bound: f64) -> BoostParams {
    let alpha = s.uniform(0.1, 3.0);
    let c = s.uniform(-bound, bound) / alpha;
    let perp = s.perpendicular(nu);
    let n = nu.vec() * c + perp.vec() * (1.0 - c * c).sqrt();
    BoostParams::new(UnitVector3::normalize(n).unwrap(), alpha).unwrap()
}

fn roundtrip_dev(nu: UnitVector3, p: &BoostParams, tol: &Tolerance) -> Result<(f64, f64)> {
    let v = velocity_from_params(nu, p, tol)?;
    let back = params_from_velocity(nu, &v, tol)?;
    Ok((
        (back.alpha - p.alpha).abs(),
        back.n.vec().max_abs_diff(p.n.vec()),
    ))
}

fn suite_roundtrip(s: &mut Sampler, samples: usize, tol: &Tolerance) -> Tracker {
    let mut t = Tracker::new();
    let band = samples.div_ceil(10);
    for i in 0..samples + band {
        let nu = s.direction();
        let (p, label) = if i < samples {
            (s.params(), "")
        } else {
            (near_degenerate_params(s, nu, 1e-4), "_band")
        };
        match roundtrip_dev(nu, &p, tol) {
            Ok((da, dn)) => {
                t.observe(&format!("alpha{label}"), 1e-9, da);
                t.observe(&format!("direction{label}"), 1e-9, dn);
            }
            Err(_) => t.observe(&format!("alpha{label}"), 1e-9, f64::INFINITY),
        }
    }
    t
}

fn suite_addition(s: &mut Sampler, samples: usize, tol: &Tolerance) -> Tracker {
    let mut t = Tracker::new();
    for _ in 0..samples {
        let nu = s.direction();
        let (v1, v2) = (s.velocity(), s.velocity());
        let dev: Result<_> = (|| {
            let direct = add_velocities(nu, &v1, &v2)?;
            let g = compose(
                nu,
                &params_from_velocity(nu, &v1, tol)?,
                &params_from_velocity(nu, &v2, tol)?,
                tol,
            )?;
            let via = velocity_from_params(nu, &g, tol)?;
            Ok(direct.vec().max_abs_diff(via.vec()))
        })();
        t.observe_result("addition_vs_compose", 1e-10, dev);
        let light = add_velocity_vectors(nu, &v1, nu.vec());
        t.observe("nu_is_absorbing", 1e-12, light.max_abs_diff(nu.vec()));
        let speed = add_velocity_vectors(nu, &v1, v2.vec()).norm();
        t.observe("subluminal", 0.0, if speed < 1.0 { 0.0 } else { speed });
    }
    t
}

fn suite_spinor(s: &mut Sampler, samples: usize, tol: &Tolerance) -> Tracker {
    let mut t = Tracker::new();
    let id = SpinorMatrix::identity();
    for _ in 0..samples {
        let nu = s.direction();
        let p = s.params();
        let c = nu.dot(p.n);
        let gen = spinor_generator(nu, p.n);
        let sq = gen * gen;
        t.observe(
            "square_identity",
            1e-12,
            sq.max_abs_diff(&id.scale_real(c * c)),
        );
        t.observe(
            "cube_identity",
            1e-12,
            (sq * gen).max_abs_diff(&gen.scale_real(c * c)),
        );

        let sm = spinor_boost(nu, &p, tol);
        let lam = boost_matrix(nu, &p, tol);
        t.observe("intertwining", 1e-10, intertwining_residual(&sm, &lam));
        let oracle = expm_complex(&gen.scale_real(0.5 * p.alpha));
        t.observe("closed_form_vs_expm", 1e-10, sm.max_abs_diff(&oracle));
        t.observe(
            "unimodular",
            1e-10,
            (sm.det() - Complex64::new(1.0, 0.0)).norm(),
        );

        let (a1, a2) = (s.alpha(), s.alpha());
        let part = |a: f64| spinor_boost(nu, &BoostParams::new(p.n, a).unwrap(), tol);
        t.observe(
            "one_parameter_representation",
            1e-10,
            (part(a1) * part(a2)).max_abs_diff(&part(a1 + a2)),
        );
    }
    t
}

fn suite_bispinor(s: &mut Sampler, samples: usize, tol: &Tolerance) -> Tracker {
    let mut t = Tracker::new();
    for _ in 0..samples {
        let spec = s.spec();
        let v = s.velocity();
        let psi = s.bispinor(0.1);
        let direct = bispinor_matrix(&spec, &v);
        let dev = params_from_velocity(spec.nu, &v, tol).map(|p| {
            let d = dilation_factor(&spec, &v);
            let two_step = spinor_boost(spec.nu, &p, tol).scale_real(d.powf(-1.5));
            direct.max_abs_diff(&two_step) / two_step.max_abs()
        });
        t.observe_result("direct_vs_two_step", 1e-9, dev);

        let out = bispinor_transform(&spec, &v, &psi);
        let d3 = dilation_factor(&spec, &v).powi(-3);
        t.observe(
            "density_weight",
            1e-10,
            rel_dev(scalar_density(&out), d3 * scalar_density(&psi)),
        );
        let dev = params_from_velocity(spec.nu, &v, tol).map(|p| {
            let lam = boost_matrix(spec.nu, &p, tol);
            let (j, j_out) = (vector_current(&psi), vector_current(&out));
            let scale = j[0] * d3 * lam.0.iter().flatten().fold(0.0f64, |a, e| a.max(e.abs()));
            (0..4)
                .map(|n| {
                    let expect: f64 = (0..4).map(|m| lam.0[n][m] * j[m]).sum::<f64>() * d3;
                    (j_out[n] - expect).abs() / scale
                })
                .fold(0.0, f64::max)
        });
        t.observe_result("current_weight", 1e-10, dev);
        let adj = dirac_adjoint(&out).contract(&out);
        t.observe("density_is_real", 1e-10, adj.im.abs() / out.norm_sqr());
    }
    t
}

fn suite_invariant(s: &mut Sampler, samples: usize, tol: &Tolerance) -> Tracker {
    let mut t = Tracker::new();
    for _ in 0..samples {
        let spec = s.spec();
        let v = s.velocity();
        let psi = s.bispinor(0.1);
        let out = bispinor_transform(&spec, &v, &psi);
        let dev: Result<_> = (|| {
            Ok(rel_dev(
                finsler_bispinor_invariant(&spec, &out, tol)?,
                finsler_bispinor_invariant(&spec, &psi, tol)?,
            ))
        })();
        t.observe_result("finsler_bispinor_invariant", 1e-9, dev);
    }
    t
}

fn suite_subgroups(s: &mut Sampler, samples: usize, tol: &Tolerance) -> Tracker {
    let mut t = Tracker::new();
    for _ in 0..samples {
        let spec = s.spec();
        let nu = spec.nu;
        let x = s.event();
        let p1 = AbelianParams::new(nu, s.perpendicular(nu), s.alpha()).unwrap();
        let p2 = AbelianParams::new(nu, s.perpendicular(nu), s.alpha()).unwrap();

        let dev: Result<_> = (|| {
            let v = abelian_velocity(nu, &p1)?;
            let y = abelian_transform_v(nu, &v, x)?;
            let z = abelian_transform(nu, &p1, x)?;
            let interval = scaled_dev(minkowski_interval(y), minkowski_interval(x));
            let along = scaled_dev(y.t - nu.dot(y.spatial()), x.t - nu.dot(x.spatial()));
            let horo = (horosphere_level(nu, &v) - 1.0).abs();
            let back = abelian_params_from_velocity(nu, &v)?;
            let inv = back.vector().max_abs_diff(p1.vector());
            Ok([interval, along, y.max_abs_diff(z), horo, inv])
        })();
        match dev {
            Ok([interval, along, forms, horo, inv]) => {
                t.observe("abelian_interval", 1e-10, interval);
                t.observe("abelian_null_projection", 1e-10, along);
                t.observe("velocity_form_matches_parameter_form", 1e-10, forms);
                t.observe("abelian_velocity_on_horosphere", 1e-12, horo);
                t.observe("abelian_inversion_round_trip", 1e-9, inv);
            }
            Err(_) => t.observe("abelian_interval", 1e-10, f64::INFINITY),
        }

        let dev: Result<_> = (|| {
            let ab = abelian_transform(nu, &p2, abelian_transform(nu, &p1, x)?)?;
            let ba = abelian_transform(nu, &p1, abelian_transform(nu, &p2, x)?)?;
            let joint = abelian_transform(nu, &p1.compose(nu, &p2)?, x)?;
            let b1 = BoostParams::new(p1.n, p1.alpha)?;
            let b2 = BoostParams::new(p2.n, p2.alpha)?;
            let g = compose(nu, &b1, &b2, tol)?;
            let restricted = g.vector().max_abs_diff(p1.vector() + p2.vector());
            let limit = abelian_transform(nu, &p1, x)?.max_abs_diff(boost_matrix(nu, &b1, tol) * x);
            Ok([
                ab.max_abs_diff(ba),
                ab.max_abs_diff(joint),
                restricted,
                limit,
            ])
        })();
        match dev {
            Ok([comm, closure, restricted, limit]) => {
                t.observe("abelian_commutativity", 1e-10, comm);
                t.observe("abelian_closure", 1e-10, closure);
                t.observe("abelian_matches_compose", 1e-10, restricted);
                t.observe("abelian_is_boost_limit", 1e-10, limit);
            }
            Err(_) => t.observe("abelian_commutativity", 1e-10, f64::INFINITY),
        }

        let a = s.alpha();
        let ax = AxialParams { alpha: a };
        let y = s.timelike();
        let out = axial_transform(&spec, &ax, y);
        let dev: Result<_> = (|| {
            let (i0, i1) = (axial_invariants(&spec, y)?, axial_invariants(&spec, out)?);
            Ok([
                rel_dev(i1.along, ((1.0 - spec.r) * a).exp() * i0.along),
                rel_dev(i1.interval, (-2.0 * spec.r * a).exp() * i0.interval),
                if i0.ratio == 0.0 {
                    i1.ratio
                } else {
                    rel_dev(i1.ratio, i0.ratio)
                },
                rel_dev(
                    finsler_interval_sq(out, &spec)?,
                    finsler_interval_sq(y, &spec)?,
                ),
            ])
        })();
        match dev {
            Ok([along, interval, ratio, finsler]) => {
                t.observe("axial_along_scaling", 1e-10, along);
                t.observe("axial_interval_scaling", 1e-10, interval);
                t.observe("axial_ratio_invariant", 1e-9, ratio);
                t.observe("axial_finsler_invariance", 1e-10, finsler);
            }
            Err(_) => t.observe("axial_along_scaling", 1e-10, f64::INFINITY),
        }
        // the same flow must not preserve a metric with a different exponent
        if a.abs() > 0.5 {
            let other = AnisotropySpec::new(nu, spec.r + 0.5).unwrap();
            let dev: Result<_> = (|| {
                Ok(rel_dev(
                    finsler_interval_sq(out, &other)?,
                    finsler_interval_sq(y, &other)?,
                ))
            })();
            let detected = dev.map(|d| if d > 1e-6 { 0.0 } else { 1.0 });
            t.observe_result("axial_mismatched_r_detected", 0.0, detected);
        }
        let b = s.alpha();
        let flow = axial_transform(&spec, &AxialParams { alpha: b }, out)
            .max_abs_diff(axial_transform(&spec, &AxialParams { alpha: a + b }, y));
        t.observe("axial_flow_additive", 1e-10, flow / out.t.abs().max(1.0));
        let back = axial_transform_inverse(&spec, &ax, out).max_abs_diff(y);
        t.observe("axial_inverse", 1e-10, back / y.t.max(1.0));
    }
    t
}

fn suite_velocity_space(s: &mut Sampler, samples: usize, tol: &Tolerance) -> Tracker {
    let mut t = Tracker::new();
    for _ in 0..samples {
        let spec = s.spec();
        let nu = spec.nu;
        let (frame, v1, v2) = (s.velocity(), s.velocity(), s.velocity());
        let dev: Result<_> = (|| {
            let a = induced_motion(nu, &frame, &v1, tol)?;
            let b = induced_motion(nu, &frame, &v2, tol)?;
            Ok(rel_dev(
                lobachevsky_distance(&a, &b),
                lobachevsky_distance(&v1, &v2),
            ))
        })();
        t.observe_result("isometry", 1e-9, dev);

        let v3 = s.velocity();
        let (d12, d23, d13) = (
            lobachevsky_distance(&v1, &v2),
            lobachevsky_distance(&v2, &v3),
            lobachevsky_distance(&v1, &v3),
        );
        t.observe("triangle_inequality", 1e-12, (d13 - d12 - d23).max(0.0));

        let horo_frame = AbelianParams::new(nu, s.perpendicular(nu), s.alpha())
            .and_then(|p| abelian_velocity(nu, &p));
        let dev = horo_frame.and_then(|f| {
            let img = induced_motion(nu, &f, &v1, tol)?;
            Ok(rel_dev(
                horosphere_level(nu, &img),
                horosphere_level(nu, &v1),
            ))
        });
        t.observe_result("horosphere_invariance", 1e-9, dev);

        let dev = axial_velocity(nu, &AxialParams { alpha: s.alpha() }).and_then(|f| {
            let img = induced_motion(nu, &f, &v1, tol)?;
            let before = cylinder_level(nu, &v1);
            Ok(if before == 0.0 {
                cylinder_level(nu, &img)
            } else {
                rel_dev(cylinder_level(nu, &img), before)
            })
        });
        t.observe_result("cylinder_invariance", 1e-9, dev);

        let d = params_from_velocity(nu, &v1, tol).map(|p| {
            rel_dev(
                dilation_from_params(&spec, &p),
                horosphere_level(nu, &v1).powf(spec.r),
            )
        });
        t.observe_result("dilation_is_horosphere_power", 1e-12, d);
    }
    t
}

fn suite_continuity(s: &mut Sampler, samples: usize, tol: &Tolerance) -> Tracker {
    let mut t = Tracker::new();
    let switch = tol.limit_switch;
    let generic = Tolerance {
        limit_switch: 0.5 * switch,
        ..*tol
    };
    let series = Tolerance {
        limit_switch: 2.0 * switch,
        ..*tol
    };
    for i in 0..samples {
        let nu = s.direction();
        let alpha = s.uniform(0.1, 3.0);
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        let c = sign * switch / alpha;
        let perp = s.perpendicular(nu);
        let n = UnitVector3::normalize(nu.vec() * c + perp.vec() * (1.0 - c * c).sqrt()).unwrap();
        let p = BoostParams::new(n, alpha).unwrap();

        let lam = boost_matrix(nu, &p, &generic).max_abs_diff(&boost_matrix(nu, &p, &series));
        t.observe("boost_matrix_branches", 1e-9, lam);
        let dev: Result<_> = (|| {
            let a = velocity_from_params(nu, &p, &generic)?;
            let b = velocity_from_params(nu, &p, &series)?;
            let pa = params_from_velocity(nu, &a, &generic)?;
            let pb = params_from_velocity(nu, &a, &series)?;
            Ok([
                a.vec().max_abs_diff(b.vec()),
                pa.vector().max_abs_diff(pb.vector()),
            ])
        })();
        match dev {
            Ok([vel, inv]) => {
                t.observe("velocity_branches", 1e-9, vel);
                t.observe("inverse_velocity_branches", 1e-9, inv);
            }
            Err(_) => t.observe("velocity_branches", 1e-9, f64::INFINITY),
        }
        let sp = spinor_boost(nu, &p, &generic).max_abs_diff(&spinor_boost(nu, &p, &series));
        t.observe("spinor_branches", 1e-9, sp);
    }
    t
}

/// Runs one named suite; `None` for an unknown name.
pub fn run_suite(name: &str, seed: u64, samples: usize, tol: &Tolerance) -> Option<SuiteReport> {
    let index = SUITES.iter().position(|s| *s == name)?;
    let mut sampler = Sampler::new(seed, index as u64);
    let s = &mut sampler;
    let tracker = match name {
        "oracle" => suite_oracle(s, samples, tol),
        "closure" => suite_closure(s, samples, tol),
        "metric" => suite_metric(s, samples, tol),
        "roundtrip" => suite_roundtrip(s, samples, tol),
        "addition" => suite_addition(s, samples, tol),
        "spinor" => suite_spinor(s, samples, tol),
        "bispinor" => suite_bispinor(s, samples, tol),
        "invariant" => suite_invariant(s, samples, tol),
        "subgroups" => suite_subgroups(s, samples, tol),
        "velocity_space" => suite_velocity_space(s, samples, tol),
        "continuity" => suite_continuity(s, samples, tol),
        _ => unreachable!("suite list and dispatch out of sync"),
    };
    Some(tracker.finish(name, samples))
}

/// Runs the selected suites (all when `filter` is `None`) in parallel, one
/// thread per suite, and reports them in [`SUITES`] order.
pub fn run_check(
    seed: u64,
    samples: usize,
    filter: Option<&[String]>,
    tol: &Tolerance,
) -> std::result::Result<CheckReport, String> {
    let selected: Vec<&str> = match filter {
        None => SUITES.to_vec(),
        Some(names) => {
            if let Some(bad) = names.iter().find(|n| !SUITES.contains(&n.as_str())) {
                return Err(format!("unknown suite '{bad}'"));
            }
            SUITES
                .iter()
                .copied()
                .filter(|s| names.iter().any(|n| n == s))
                .collect()
        }
    };
    let suites: Vec<SuiteReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = selected
            .iter()
            .map(|name| scope.spawn(move || run_suite(name, seed, samples, tol)))
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .expect("suite thread panicked")
                    .expect("suite name validated")
            })
            .collect()
    });
    let passed = suites.iter().all(|s| s.passed);
    Ok(CheckReport {
        seed,
        samples,
        vacuous: samples == 0,
        passed,
        suites,
    })
}
