//! Type-A eigenfunctions of the Cherednik operators for the orbit of (2,1,0).
use scatter_hecke::spectrum::{eigenfunction, hamiltonian_spectrum, orbit};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let partition = [2, 1, 0];
    for k in orbit(3, &partition) {
        let rec = eigenfunction(&k)?;
        let m: Vec<String> = rec.multiplet.iter().map(|x| x.to_string()).collect();
        println!("E{k:?}  ({})", m.join(", "));
        println!("    {}", rec.eigenfunction);
    }
    println!("H_1 on the orbit:");
    for (k, e) in hamiltonian_spectrum(3, 1, &partition)? {
        println!("  {k:?}: {e}");
    }
    Ok(())
}
