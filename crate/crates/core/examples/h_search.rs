//! Runs the two-part search on `H(k, 4)` for a range of `k`, each with its
//! own time budget.
//!
//! ```text
//! cargo run --release -p compart --example h_search -- [budget_ms] [k_from] [k_to]
//! ```

use compart::generators::gen_h;
use compart::solver::search_p_greater_than_2;
use compart::{Budget, GreaterThanTwo};

fn arg(i: usize, default: u64) -> u64 {
    std::env::args().nth(i).map(|s| s.parse().expect("numeric argument")).unwrap_or(default)
}

fn main() {
    let ms = arg(1, 60_000);
    let (from, to) = (arg(2, 2) as usize, arg(3, 9) as usize);
    println!("k\tm\tresult\tnodes\tseconds");
    for k in from..=to {
        let g = gen_h(k, 4);
        let mut budget = Budget::from_millis(ms);
        let result = match search_p_greater_than_2(&g, &mut budget) {
            Ok(GreaterThanTwo::Proved) => "p>2",
            Ok(GreaterThanTwo::Found(_)) => "2-partition",
            Err(_) => "timeout",
        };
        println!("{k}\t{}\t{result}\t{}\t{:.1}", g.m(), budget.nodes(), budget.elapsed().as_secs_f64());
    }
}
