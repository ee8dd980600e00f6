//! Geodesic words for translations: A2 by -e1, B2 by e1+e2, and the inverse word.
use scatter_hecke::affine::{geodesic_word, word_concat};
use scatter_hecke::rootsys::{build_root_system, ints, Family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a2 = build_root_system(Family::A, 2)?;
    let w = geodesic_word(&a2, &ints(&[-1, 0, 0]))?;
    println!("A2, xi = -e1:\n{}", serde_json::to_string_pretty(&w.to_json())?);

    let b2 = build_root_system(Family::B, 2)?;
    let w = geodesic_word(&b2, &ints(&[1, 1]))?;
    println!("B2, xi = e1+e2: {} reflections", w.reflection_count);

    // w · w⁻¹ translates by nothing.
    let round = word_concat(&w, &w.inverse())?;
    println!("total translation of w w^-1: {:?}", round.total_translate());
    Ok(())
}
