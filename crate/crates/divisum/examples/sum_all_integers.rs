// The headline computation: assigning 1 + 2 + 3 + 4 + ... the value -1/12,
// with the full chain of forced-value steps printed and re-verified.

use divisum::engine::{classify, explain, DerivationStep};
use divisum::rational::format_rat;
use divisum::seq::powers;

fn main() {
    let u = powers(1); // 1, 2, 3, 4, ...
    println!("u  = 1, 2, 3, 4, ...");
    println!("gf = {}", u.gf());
    println!();

    let derivation = explain(&u).unwrap();
    for (i, step) in derivation.steps.iter().enumerate() {
        // each step carries its own proof; replay() re-derives it from scratch
        assert!(step.replay());
        match step {
            DerivationStep::Cauchy {
                multiplier,
                product,
                value,
                ..
            } => println!(
                "step {}: ({multiplier}) ox v = ({product})  =>  sigma(v) = {}",
                i + 1,
                format_rat(value)
            ),
            DerivationStep::Dirichlet {
                factor,
                transformed_value,
                value,
                ..
            } => println!(
                "step {}: u os ({factor}) has sigma {}  =>  sigma(u) = {}",
                i + 1,
                format_rat(transformed_value),
                format_rat(value)
            ),
        }
    }
    println!();
    println!("sigma(u) = {}", format_rat(&derivation.value));
    println!("classification: {}", classify(&u));
}
