//! Prints the table of Euler obstructions and subdiagram volumes at the three
//! non-origin vertices of P(1, k, m, n), for k <= m <= n <= max.
//!
//! Usage: cargo run --example euler_tables -- [max] [isolated|non-isolated|all]

use toric_dual::wps::{format_table, wps_table, TableFilter};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let max: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(10);
    let filter = match args.next().as_deref() {
        Some("isolated") => TableFilter::Isolated,
        Some("non-isolated") => TableFilter::NonIsolated,
        _ => TableFilter::All,
    };
    let rows = wps_table(max, filter)?;
    println!("# k m n E1 E2 E3 R1 R2 R3");
    print!("{}", format_table(&rows));
    Ok(())
}
