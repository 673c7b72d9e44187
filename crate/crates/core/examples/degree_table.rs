//! Degree statistics for a grid of colors, computed in parallel.
//!
//! `cargo run --release --example degree_table -- 5 8` uses `T(2,5)` up to `m = 8`.

use sl3jones::cli::table_rows;
use sl3jones::Variable;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>().expect("integer argument"));
    let b = args.next().unwrap_or(3);
    let max = args.next().unwrap_or(6);
    let rows = table_rows(b, max, Variable::QInverse, false, 0).expect("b must be odd");
    println!("{:>3} {:>3} {:>8} {:>8} {:>10} {:>10} {:>6}", "m1", "m2", "min", "max", "min_c", "max_c", "terms");
    for r in rows {
        println!(
            "{:>3} {:>3} {:>8} {:>8} {:>10} {:>10} {:>6}",
            r.m1, r.m2, r.min_deg, r.max_deg, r.min_coeff, r.max_coeff, r.term_count
        );
    }
}
