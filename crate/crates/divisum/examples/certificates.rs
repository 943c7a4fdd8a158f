// Certificates are the product, not a byproduct: every sum the engine
// assigns comes with a finite identity that forces the value, and the
// identity can be replayed by anyone with a convolution routine.

use divisum::engine::{sum_cauchy_ext, verify_certificate, CauchySummation, Certificate};
use divisum::rational::{format_rat, rat};
use divisum::seq::{alternating_powers, geometric, FiniteSeq};

fn main() {
    // Grandi's series 1 - 1 + 1 - 1 + ...
    let grandi = geometric(&rat(-1, 1));
    let CauchySummation::Summable { value, certificate } = sum_cauchy_ext(&grandi) else {
        unreachable!("Grandi's series is Cauchy-summable");
    };
    println!("Grandi: sigma = {}", format_rat(&value));
    println!("  multiplier m = {}", certificate.multiplier);
    println!("  product  m(x)u = {}", certificate.product);
    println!(
        "  forced value sigma(m(x)u)/sigma(m) = {}",
        format_rat(&certificate.forced_value())
    );
    assert!(certificate.verify(&grandi));

    // 1 - 2 + 3 - 4 + ... works the same way with a heavier multiplier.
    let ap1 = alternating_powers(1);
    let CauchySummation::Summable { value, certificate } = sum_cauchy_ext(&ap1) else {
        unreachable!();
    };
    println!();
    println!("1 - 2 + 3 - 4 + ...: sigma = {}", format_rat(&value));
    println!("  multiplier m = {}", certificate.multiplier);
    assert!(certificate.verify(&ap1));

    // Verification is not a rubber stamp: tamper with the certificate and
    // it is rejected.
    let mut tampered = certificate.clone();
    tampered.product = FiniteSeq::from_ints(&[2]);
    assert!(!verify_certificate(&ap1, &Certificate::Cauchy(tampered)));
    println!();
    println!("a tampered certificate fails verification, as it should");
}
