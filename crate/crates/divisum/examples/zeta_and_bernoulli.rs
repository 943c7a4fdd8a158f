// Two independent routes to the same numbers.  The summation engine
// assigns values to (k+1)^n by pole cancellation; the Bernoulli table gets
// them from the defining recurrence (and, as a third route, from the
// Stirling-number representation).  They agree, column for column.

use divisum::engine::classify;
use divisum::numbers::{bernoulli_plus, bernoulli_worpitzky, zeta_neg};
use divisum::rational::format_rat;
use divisum::seq::powers;

fn main() {
    println!("{:>3} {:>18} {:>18}", "n", "sigma((k+1)^n)", "zeta(-n)");
    for n in 0..=10 {
        let engine = classify(&powers(n));
        let via_bernoulli = zeta_neg(n);
        let e = format_rat(engine.value().expect("summable"));
        let b = format_rat(&via_bernoulli);
        assert_eq!(e, b);
        println!("{n:>3} {e:>18} {b:>18}");
    }

    println!();
    println!("Bernoulli numbers, recurrence vs Stirling representation:");
    for n in 1..=12 {
        let a = bernoulli_plus(n);
        let b = bernoulli_worpitzky(n).unwrap();
        assert_eq!(a, b);
        println!("  B({n:>2}) = {}", format_rat(&a));
    }
}
