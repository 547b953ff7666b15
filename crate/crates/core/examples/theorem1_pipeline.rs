//! Every stage for g_n. Usage: theorem1_pipeline [q d u t]

use flagspace::pipeline::{end_to_end_theorem1, ResourceLimits};
use flagspace::Result;

fn main() -> Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (q, d, u, t) = match args[..] {
        [q, d, u, t] => (q, d, u, t as u32),
        _ => (2, 3, 1, 1),
    };
    let report = end_to_end_theorem1(q, d, u, t, &ResourceLimits::default())?;
    println!("h = {}", report.polynomial_text);
    for s in &report.stages {
        println!("{:<17} {:?}  {}", s.name, s.status, s.detail);
    }
    Ok(())
}
