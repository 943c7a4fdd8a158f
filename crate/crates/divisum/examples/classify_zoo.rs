// Every tier of the classification, on one screen.

use divisum::engine::{classify, classify_with_support};
use divisum::poly::Poly;
use divisum::rational::rat;
use divisum::ratfun::RatFun;
use divisum::seq::{geometric, powers, GfSeq};

fn show(name: &str, u: &GfSeq) {
    println!("{name}");
    println!("  gf: {}", u.gf());
    println!("  {}", classify(u));
    println!();
}

fn main() {
    show("(1/3)^k  — geometric, ratio inside the disk", &geometric(&rat(1, 3)));
    show("(-1)^k  — Grandi", &geometric(&rat(-1, 1)));
    show("(k+1)^2  — needs the Dirichlet-product tier", &powers(2));

    // The Dirichlet-tier search is bounded; with the bound forced to zero
    // the same sequence reports an exhausted search instead of a value.
    println!("(k+1)^2 with the certificate search disabled");
    println!("  {}", classify_with_support(&powers(2), 0));
    println!();

    // A denominator engineered to make the root-location test degenerate:
    // the summability verdict is still exact, only the convergence
    // question is left open.
    let den = &Poly::from_ints(&[1, 1]) * &Poly::from_coeffs(vec![
        rat(1, 1),
        rat(0, 1),
        rat(-1, 4),
    ]);
    let u = GfSeq::from_ratfun(RatFun::new(Poly::one(), den).unwrap()).unwrap();
    println!("a root-test degenerate case");
    println!("  gf: {}", u.gf());
    println!("  {}", classify(&u));
}
