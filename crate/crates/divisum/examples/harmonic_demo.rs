// The boundary of the method.  The harmonic sequence H = (1/(k+1)) admits
// no value in either extension: H os (e(0) - e(1)) is the alternating
// harmonic series, which converges to ln 2, while sigma(e(0) - e(1)) = 0 —
// any assignment would force 0 * sigma(H) = ln 2.  The engine therefore
// refuses H symbolically, and this demo shows the ln 2 side numerically.

use divisum::oracle::{harmonic_demo, harmonic_demo_terms, pairwise_average_sum, rat_f64};
use divisum::rational::format_rat;

fn main() {
    let terms = harmonic_demo_terms(12);
    let shown: Vec<String> = terms.iter().map(format_rat).collect();
    println!("H os (e(0) - e(1)) = {}, ...", shown.join(", "));
    println!();

    // plain partial sums converge like 1/n; the averaging acceleration
    // gains a binary digit per pass
    for n in [10, 20, 40, 80] {
        let floats: Vec<f64> = harmonic_demo_terms(n).iter().map(rat_f64).collect();
        let plain: f64 = floats.iter().sum();
        let accelerated = pairwise_average_sum(&floats);
        println!(
            "n = {n:>3}   partial sum {plain:.10}   accelerated {accelerated:.10}"
        );
    }

    println!();
    println!("estimate = {:.12}", harmonic_demo());
    println!("ln 2     = {:.12}", std::f64::consts::LN_2);
}
