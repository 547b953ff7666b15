//! Every stage for the cubic over F_{q^2}, q = 3^k. Usage: theorem2_pipeline [k]

use flagspace::pipeline::{end_to_end_theorem2, ResourceLimits};
use flagspace::Result;

fn main() -> Result<()> {
    let k = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(1);
    let report = end_to_end_theorem2(k, &ResourceLimits::default())?;
    println!("q = {}, h = {}", report.params.q, report.polynomial_text);
    for s in &report.stages {
        println!("{:<17} {:?}  {}", s.name, s.status, s.detail);
    }
    println!("{}", serde_json::to_string(&report.design).unwrap_or_default());
    Ok(())
}
