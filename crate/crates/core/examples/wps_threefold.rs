//! Euler obstructions on all faces of P(1, k, m, n) and the degree of its
//! dual variety.
//!
//! Usage: cargo run --example wps_threefold -- [k m n]

use toric_dual::wps::{singular_locus_class, wps_report, Weights};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let (k, m, n) = match args[..] {
        [k, m, n] => (k, m, n),
        _ => (6, 10, 15),
    };
    let w = Weights::new(vec![1, k, m, n])?;
    println!("P(1,{k},{m},{n}): singular locus {:?}", singular_locus_class(&w));
    let r = wps_report(&w)?;
    for dim in 0..=2 {
        for f in r.report.faces_of_dim(dim) {
            let verts: Vec<String> = f.vertices.iter().map(|v| v.to_string()).collect();
            let cone = f.cone_type.as_ref().map_or(String::new(), |c| format!(" cone {c}"));
            println!("dim {dim} [{}]: Eu {}{cone}", verts.join(" "), f.eu);
        }
    }
    let t = &r.report.terms;
    println!(
        "Vol {} area {} sum Eu(e)L(e) {} sum Eu(v) {} -> degree {}",
        t.volume,
        t.area.as_ref().map_or("-".into(), |a| a.to_string()),
        t.edge_eu_lengths.as_ref().map_or("-".into(), |a| a.to_string()),
        t.vertices,
        r.degree
    );
    Ok(())
}
