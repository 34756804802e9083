use segre::algebra::{rational, Ring};
use segre::AffinePoint;

fn main() -> segre::Result<()> {
    let r = Ring::new(["x", "y"])?;
    let p = r.parse("x^2 - 3/4*y^3 + 1")?;
    let q = r.parse("x - y")?;
    println!("p     = {}", r.format(&p));
    println!("p*q   = {}", r.format(&(&p * &q)));
    println!("q^5   = {}", r.format(&q.pow(5)));

    // p(z + a) moves the point a to the origin
    let a = AffinePoint::from_integers(&[1, -2]);
    let moved = p.translate(&a)?;
    println!("p(z + a) = {}", r.format(&moved));
    println!("p(a) = {}", p.evaluate(&a)?);

    let exact = (&q * &p).exact_div(&q).expect("q divides q*p");
    assert_eq!(exact, p);
    println!(
        "scaled by 2/3: {}",
        r.format(&p.scale(&(rational(2) / rational(3))))
    );
    Ok(())
}
