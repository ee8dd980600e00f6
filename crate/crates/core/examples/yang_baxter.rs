//! Weyl relations of the limiting x-operators, checked in the Hecke-module carrier.
use scatter_hecke::rootsys::{build_root_system, Family, RootSystem};
use scatter_hecke::yangbaxter::verify_weyl_relations;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let systems = vec![
        ("A1xA1", RootSystem::a1_times_a1()),
        ("A2", build_root_system(Family::A, 2)?),
        ("B2", build_root_system(Family::B, 2)?),
        ("G2", build_root_system(Family::G, 2)?),
    ];
    for (name, rs) in systems {
        let rep = verify_weyl_relations(&rs)?;
        println!("{name:<6} cases {:>5}  failures {}", rep.cases, rep.failures.len());
    }
    Ok(())
}
