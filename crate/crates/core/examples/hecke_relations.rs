//! Quadratic and braid relations plus commuting scattering operators, on small windows.
use scatter_hecke::rootsys::{build_root_system, Family};
use scatter_hecke::verify::{braid_suite, commute_suite, quadratic_suite, unitarity_suite};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rs = build_root_system(Family::B, 2)?;
    for rep in [
        quadratic_suite(&rs, 2)?,
        braid_suite(&rs, 2)?,
        unitarity_suite(&rs, 2)?,
        commute_suite(&rs, 1)?,
    ] {
        println!("{:<14} cases {:>5}  failures {}", rep.suite, rep.cases, rep.failures.len());
    }
    Ok(())
}
