// The engine's values are exact, so a numeric method can only gain
// confidence, not precision.  Abel evaluation sums the series at points
// approaching 1 from below and extrapolates; on sequences without a pole
// at 1 it lands on the engine's rational value to float accuracy.

use divisum::engine::classify;
use divisum::oracle::{abel_estimate, rat_f64, DEFAULT_ABEL_TERMS};
use divisum::rational::{format_rat, rat};
use divisum::seq::{alternating_binomial, alternating_powers, geometric, GfSeq};

fn check(name: &str, u: &GfSeq) {
    let exact = classify(u).value().expect("summable").clone();
    let est = abel_estimate(u, DEFAULT_ABEL_TERMS).unwrap();
    let error = (est.value - rat_f64(&exact)).abs();
    println!(
        "{name:24} exact {:>8}   abel {:>13.10}   |error| {error:.2e}",
        format_rat(&exact),
        est.value
    );
}

fn main() {
    check("1 - 1 + 1 - 1 + ...", &geometric(&rat(-1, 1)));
    check("1 - 2 + 3 - 4 + ...", &alternating_powers(1));
    check("1 - 2/3 + 4/9 - ...", &geometric(&rat(-2, 3)));
    check("1 - 3 + 6 - 10 + ...", &alternating_binomial(2));
    check("1 - 8 + 27 - ...", &alternating_powers(3));

    // a pole at 1 is detected exactly and refused, rather than returning a
    // number that means nothing
    let err = abel_estimate(&divisum::seq::powers(1), DEFAULT_ABEL_TERMS).unwrap_err();
    println!();
    println!("1 + 2 + 3 + ... -> {err}");
}
