use std::fs::File;
use std::io::{BufWriter, Write};

use serde::Serialize;

use finsler_core::boost::{
    boost_matrix, compose as compose_params, dilation_factor, dilation_from_params,
    generalized_boost_matrix, params_from_velocity, velocity_from_params,
};
use finsler_core::conformance::run_check;
use finsler_core::spinor::{
    bispinor_matrix, bispinor_transform, finsler_bispinor_invariant, scalar_density, vector_current,
};
use finsler_core::subgroups::{axial_invariants, AxialInvariants};
use finsler_core::velocity_space::{
    cylinder_level, horosphere_level, sample_surface, Resolution, SurfaceFamily,
};
use finsler_core::{
    finsler_interval_sq, minkowski_interval, AnisotropySpec, Bispinor, BoostParams, FourVector,
    Matrix4, Tolerance, UnitVector3, Vec3, Velocity3,
};

use crate::{
    Background, BoostArgs, CheckArgs, CliError, ComposeArgs, Family, Format, InvariantsArgs,
    SpinorArgs, SurfaceArgs,
};

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(|e| CliError::Domain(e.to_string()))
}

fn spec_of(bg: &Background) -> Result<AnisotropySpec, CliError> {
    Ok(AnisotropySpec::new(
        UnitVector3::try_from_vec(bg.nu)?,
        bg.r,
    )?)
}

/// Boost given as `(n, alpha)` or as a velocity, exactly one of the two.
fn params_of(
    nu: UnitVector3,
    n: Option<Vec3>,
    alpha: Option<f64>,
    v: Option<Vec3>,
    tol: &Tolerance,
    label: &str,
) -> Result<(BoostParams, Velocity3), CliError> {
    match (n, alpha, v) {
        (Some(n), Some(alpha), None) => {
            let p = BoostParams::new(UnitVector3::try_from_vec(n)?, alpha)?;
            Ok((p, velocity_from_params(nu, &p, tol)?))
        }
        (None, None, Some(v)) => {
            let v = Velocity3::try_from_vec(v)?;
            Ok((params_from_velocity(nu, &v, tol)?, v))
        }
        _ => Err(CliError::Usage(format!(
            "boost {label} needs either --n{label} with --alpha{label}, or --v{label}"
        ))),
    }
}

#[derive(Serialize)]
struct BoostReport {
    nu: UnitVector3,
    r: f64,
    params: BoostParams,
    velocity: Velocity3,
    dilation: f64,
    lorentz_matrix: Matrix4,
    matrix: Matrix4,
    #[serde(skip_serializing_if = "Option::is_none")]
    event: Option<FourVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    event_image: Option<FourVector>,
}

pub fn boost(a: BoostArgs, tol: &Tolerance) -> Result<String, CliError> {
    let spec = spec_of(&a.background)?;
    let (params, velocity) = params_of(spec.nu, a.n, a.alpha, a.v, tol, "")?;
    let matrix = generalized_boost_matrix(&spec, &params, tol);
    to_json(&BoostReport {
        nu: spec.nu,
        r: spec.r,
        params,
        velocity,
        dilation: dilation_from_params(&spec, &params),
        lorentz_matrix: boost_matrix(spec.nu, &params, tol),
        matrix,
        event: a.x,
        event_image: a.x.map(|x| matrix * x),
    })
}

#[derive(Serialize)]
struct Parametrized {
    params: BoostParams,
    velocity: Velocity3,
}

#[derive(Serialize)]
struct ComposeReport {
    nu: UnitVector3,
    first: Parametrized,
    second: Parametrized,
    composed: Parametrized,
    identity: bool,
    matrix: Matrix4,
    residual: f64,
}

pub fn compose(a: ComposeArgs, tol: &Tolerance) -> Result<String, CliError> {
    let nu = UnitVector3::try_from_vec(a.nu)?;
    let (p1, v1) = params_of(nu, a.n1, a.alpha1, a.v1, tol, "1")?;
    let (p2, v2) = params_of(nu, a.n2, a.alpha2, a.v2, tol, "2")?;
    let g = compose_params(nu, &p1, &p2, tol)?;
    let matrix = boost_matrix(nu, &g, tol);
    let product = boost_matrix(nu, &p2, tol) * boost_matrix(nu, &p1, tol);
    to_json(&ComposeReport {
        nu,
        first: Parametrized {
            params: p1,
            velocity: v1,
        },
        second: Parametrized {
            params: p2,
            velocity: v2,
        },
        composed: Parametrized {
            params: g,
            velocity: velocity_from_params(nu, &g, tol)?,
        },
        identity: g.is_identity(),
        matrix,
        residual: matrix.max_abs_diff(&product),
    })
}

#[derive(Serialize)]
struct EventInvariants {
    minkowski_interval: f64,
    finsler_interval_sq: f64,
    axial: AxialInvariants,
}

#[derive(Serialize)]
struct VelocityInvariants {
    horosphere_level: f64,
    cylinder_level: f64,
    dilation: f64,
}

#[derive(Serialize)]
struct BispinorInvariants {
    scalar_density: f64,
    current: [f64; 4],
    finsler_invariant: f64,
}

#[derive(Serialize)]
struct InvariantsReport {
    nu: UnitVector3,
    r: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    event: Option<EventInvariants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    velocity: Option<VelocityInvariants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bispinor: Option<BispinorInvariants>,
}

pub fn invariants(a: InvariantsArgs, tol: &Tolerance) -> Result<String, CliError> {
    if a.x.is_none() && a.v.is_none() && a.psi.is_none() {
        return Err(CliError::Usage(
            "supply at least one of --x, --v, --psi".to_string(),
        ));
    }
    let spec = spec_of(&a.background)?;
    let event = match a.x {
        None => None,
        Some(x) => Some(EventInvariants {
            minkowski_interval: minkowski_interval(x),
            finsler_interval_sq: finsler_interval_sq(x, &spec)?,
            axial: axial_invariants(&spec, x)?,
        }),
    };
    let velocity = match a.v {
        None => None,
        Some(v) => {
            let v = Velocity3::try_from_vec(v)?;
            Some(VelocityInvariants {
                horosphere_level: horosphere_level(spec.nu, &v),
                cylinder_level: cylinder_level(spec.nu, &v),
                dilation: dilation_factor(&spec, &v),
            })
        }
    };
    let bispinor = match a.psi {
        None => None,
        Some(pairs) => {
            let psi = Bispinor::from_pairs(pairs);
            Some(BispinorInvariants {
                scalar_density: scalar_density(&psi),
                current: vector_current(&psi),
                finsler_invariant: finsler_bispinor_invariant(&spec, &psi, tol)?,
            })
        }
    };
    to_json(&InvariantsReport {
        nu: spec.nu,
        r: spec.r,
        event,
        velocity,
        bispinor,
    })
}

#[derive(Serialize)]
struct SpinorReport {
    nu: UnitVector3,
    r: f64,
    velocity: Velocity3,
    dilation: f64,
    matrix: [[[f64; 2]; 4]; 4],
    input: Bispinor,
    output: Bispinor,
    scalar_density_in: f64,
    scalar_density_out: f64,
}

pub fn spinor(a: SpinorArgs, _tol: &Tolerance) -> Result<String, CliError> {
    let spec = spec_of(&a.background)?;
    let v = Velocity3::try_from_vec(a.v)?;
    let psi = Bispinor::from_pairs(a.psi);
    if !psi.is_finite() {
        return Err(CliError::Usage(
            "bispinor has non-finite components".to_string(),
        ));
    }
    let out = bispinor_transform(&spec, &v, &psi);
    to_json(&SpinorReport {
        nu: spec.nu,
        r: spec.r,
        velocity: v,
        dilation: dilation_factor(&spec, &v),
        matrix: bispinor_matrix(&spec, &v).to_pairs(),
        input: psi,
        output: out,
        scalar_density_in: scalar_density(&psi),
        scalar_density_out: scalar_density(&out),
    })
}

pub fn check(a: CheckArgs, tol: &Tolerance) -> Result<String, CliError> {
    let filter = (!a.suite.is_empty()).then_some(a.suite.as_slice());
    let report = run_check(a.seed, a.samples, filter, tol).map_err(CliError::Usage)?;
    let json = to_json(&report)?;
    if report.passed {
        Ok(json)
    } else {
        Err(CliError::CheckFailed(json))
    }
}

#[derive(Serialize)]
struct SurfaceFile<'a> {
    nu: UnitVector3,
    family: SurfaceFamily,
    level: f64,
    degenerate: bool,
    points: &'a [Velocity3],
}

#[derive(Serialize)]
struct SurfaceSummary {
    path: String,
    format: &'static str,
    family: SurfaceFamily,
    level: f64,
    points: usize,
    degenerate: bool,
}

pub fn surface(a: SurfaceArgs) -> Result<String, CliError> {
    let nu = UnitVector3::try_from_vec(a.nu)?;
    let family = match a.family {
        Family::Horosphere => SurfaceFamily::Horosphere,
        Family::Cylinder => SurfaceFamily::Cylinder,
    };
    let res = Resolution {
        rows: a.rows,
        cols: a.cols,
        extent: a.extent,
    };
    let sample = sample_surface(nu, family, a.level, &res)?;
    if sample.is_degenerate() {
        eprintln!("warning: cylinder level 0 is the nu axis; exporting a line");
    }
    let path = a.out.display().to_string();
    let io_err = |e: std::io::Error| CliError::Domain(format!("{path}: {e}"));
    let file = File::create(&a.out).map_err(io_err)?;
    let mut w = BufWriter::new(file);
    match a.format {
        Format::Json => {
            let doc = SurfaceFile {
                nu,
                family,
                level: sample.level,
                degenerate: sample.is_degenerate(),
                points: &sample.points,
            };
            serde_json::to_writer_pretty(&mut w, &doc)
                .map_err(|e| CliError::Domain(format!("{path}: {e}")))?;
            writeln!(w).map_err(io_err)?;
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(&mut w);
            let csv_err = |e: csv::Error| CliError::Domain(format!("{path}: {e}"));
            csv.write_record(["vx", "vy", "vz", "level"])
                .map_err(csv_err)?;
            for v in &sample.points {
                let [x, y, z] = v.vec().to_array();
                csv.serialize((x, y, z, family.level(nu, v)))
                    .map_err(csv_err)?;
            }
            csv.flush().map_err(io_err)?;
        }
    }
    w.flush().map_err(io_err)?;
    to_json(&SurfaceSummary {
        path,
        format: match a.format {
            Format::Json => "json",
            Format::Csv => "csv",
        },
        family,
        level: sample.level,
        points: sample.points.len(),
        degenerate: sample.is_degenerate(),
    })
}
