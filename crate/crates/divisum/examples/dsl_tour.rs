// The expression language: named sequences, rational literals, three
// products, and spanned parse errors.

use divisum::dsl::{elaborate, parse, pretty, Elaborated};
use divisum::engine::classify;
use divisum::rational::format_rat;

fn main() {
    // atoms and operators; `ox`/`os` are ASCII spellings of the two products
    for text in [
        "P(2)",
        "G(-2/3)",
        "T(4)",
        "3/2 * AP(1) - e(0)",
        "P(1) \u{2297} G(1/2)",       // same as `P(1) ox G(1/2)`
        "(P(0) + e(1)) os e(2)",
        "--P(1)",
    ] {
        let ast = parse(text).unwrap();
        print!("{text:32}  ->  {}", pretty(&ast));
        if let Elaborated::Sequence(u) = elaborate(&ast).unwrap() {
            let head: Vec<String> = u.terms(5).iter().map(format_rat).collect();
            print!("   [{}, ...]", head.join(", "));
            if let Some(v) = classify(&u).value() {
                print!("   sigma = {}", format_rat(v));
            }
        }
        println!();
    }

    println!();

    // errors carry the character offset of the problem
    for text in ["P(1) +", "P(-3)", "2 ** 3", "G()"] {
        let err = parse(text).unwrap_err();
        println!("{text:12}  ->  error at {}: {}", err.position, err.message);
    }

    // some inputs parse but denote nothing computable: `os` needs a finite
    // side, and `H` only appears in the harmonic demonstration
    println!();
    for text in ["P(0) os P(1)", "H + e(0)"] {
        let ast = parse(text).unwrap();
        println!("{text:12}  ->  {}", elaborate(&ast).unwrap_err());
    }
}
