//! Print the basic data of a few root systems.
use scatter_hecke::rootsys::{build_root_system, fmt_vec, Family, RootSystem};

fn show(rs: &RootSystem) {
    println!("{}", rs.canonical_text());
    println!("  positive roots: {}", rs.positive_roots.len());
    for h in rs.component_highest_roots() {
        println!("  highest root:   {}", fmt_vec(&h.coords));
    }
    for w in rs.minuscule_weights() {
        println!("  minuscule:      {}", fmt_vec(&w.coords));
    }
    println!("  |W| = {}", rs.weyl_group().len());
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (fam, rank) in [(Family::A, 2), (Family::B, 2), (Family::C, 3), (Family::D, 4), (Family::G, 2)] {
        show(&build_root_system(fam, rank)?);
    }
    show(&RootSystem::a1_times_a1());
    Ok(())
}
