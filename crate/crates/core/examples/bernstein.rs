//! Scattering operator versus its factorization through affine simple generators.
use scatter_hecke::affine::gallery_labels;
use scatter_hecke::heckerep::{bernstein_check, lattice_window};
use scatter_hecke::rootsys::{build_root_system, fmt_vec, ints, Family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rs = build_root_system(Family::A, 2)?;
    let window = lattice_window(&rs, 2);
    for xi in [ints(&[1, 0, 0]), ints(&[1, 1, 0]), ints(&[0, 0, -1])] {
        let labels = gallery_labels(&rs, &xi)?;
        let outcome = bernstein_check(&rs, &xi, &window)?;
        println!("xi = {:<10} gallery {labels:?}  {outcome:?}", fmt_vec(&xi));
    }
    Ok(())
}
