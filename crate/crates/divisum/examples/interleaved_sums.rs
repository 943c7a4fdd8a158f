// The index-multiplicative product `os` interleaves a sequence with zeros:
// (u os e(1))(2k+1) = u(k).  Values behave multiplicatively, which leads to
// some initially surprising assignments — including the fact that shifting
// is *not* value-preserving at this tier.

use divisum::dsl::{elaborate, parse, Elaborated};
use divisum::engine::classify;
use divisum::rational::format_rat;

fn sum_of(text: &str) -> String {
    let ast = parse(text).unwrap();
    let Elaborated::Sequence(u) = elaborate(&ast).unwrap() else {
        unreachable!("no harmonic demo here");
    };
    format_rat(classify(&u).value().expect("summable"))
}

fn show(series: &str, text: &str) {
    let terms_expr = parse(text).unwrap();
    let Elaborated::Sequence(u) = elaborate(&terms_expr).unwrap() else {
        unreachable!();
    };
    let head: Vec<String> = u.terms(8).iter().map(format_rat).collect();
    println!("{series}");
    println!("  terms: {}, ...", head.join(", "));
    println!("  sigma = {}", sum_of(text));
    println!();
}

fn main() {
    show("1 + 2 + 3 + 4 + ...", "P(1)");
    show("0 + 1 + 0 + 2 + 0 + 3 + ...", "P(1) os e(1)");
    show(
        "1 + 0 + 2 + 0 + 3 + 0 + ...",
        "(1/2) * (P(1) os (e(0) - 2*e(1)) + P(0) os (e(0) - e(1)))",
    );
    show("1 + 3 + 5 + 7 + ...", "2*P(1) - P(0)");
    show("0 + 1 + 0 + 3 + 0 + 5 + ...", "(2*P(1) - P(0)) os e(1)");
    show("1 + 0 + 3 + 0 + 5 + 0 + ...", "P(1) os (e(0) - 2*e(1))");

    // Shifting changes the value: (0,1,1,1,...) must be read as P(0) - e(0),
    // not as a shifted P(0), and its sum is -3/2 rather than -1/2.
    show("0 + 1 + 1 + 1 + ...", "P(0) - e(0)");
    show("1 + 1 + 1 + 1 + ...", "P(0)");
}
