//! Constant-term inner product at q = t^{κ/2}: the measure and a Gram matrix.
use scatter_hecke::innerprod::{build_measure, gram_matrix, s_string};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = build_measure(2, 1)?;
    println!("measure (n=2, kappa=1): {}", spec.measure);
    let g = gram_matrix(2, 1, 2)?;
    for (k, row) in g.compositions.iter().zip(&g.entries) {
        let cells: Vec<String> = row.iter().map(s_string).collect();
        println!("{k:?}: {}", cells.join(" | "));
    }
    for w in &g.warnings {
        println!("warning: {w}");
    }
    Ok(())
}
