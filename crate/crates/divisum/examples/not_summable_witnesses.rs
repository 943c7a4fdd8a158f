// Non-membership is also certified.  A witness is a finite m with
// sigma(m) = 0 whose product with u is finite with a nonzero sum: any
// consistent value for u would force 0 != 0.

use divisum::engine::{sum_cauchy_ext, CauchySummation};
use divisum::rational::format_rat;
use divisum::seq::{powers, FiniteSeq};

fn main() {
    // 1 + 1 + 1 + ... is not summable in the Cauchy-product extension
    let p0 = powers(0);
    let CauchySummation::NotSummable { witness } = sum_cauchy_ext(&p0) else {
        unreachable!("1 + 1 + 1 + ... has no Cauchy-tier sum");
    };
    println!("u = 1, 1, 1, 1, ...");
    println!("  witness m = {}  (sigma(m) = 0)", witness.multiplier);
    println!(
        "  m (x) u = {}  (sigma = {})",
        witness.product,
        format_rat(&witness.product.coefficient_sum())
    );
    assert!(witness.verify(&p0));
    assert_eq!(witness.multiplier, FiniteSeq::from_ints(&[1, -1]));

    // same story one tier up the pole order
    let p1 = powers(1);
    let CauchySummation::NotSummable { witness } = sum_cauchy_ext(&p1) else {
        unreachable!();
    };
    println!();
    println!("u = 1, 2, 3, 4, ...");
    println!("  witness m = {}", witness.multiplier);
    println!("  m (x) u = {}", witness.product);
    assert!(witness.verify(&p1));
    assert_eq!(witness.multiplier, FiniteSeq::from_ints(&[1, -2, 1]));

    println!();
    println!("both sequences still get values one extension later; see classify_zoo");
}
