use segre::algebra::Ring;
use segre::groebner::{eliminate, krull_dimension, saturate};
use segre::intersect::implicitize;
use segre::{IdealRep, MonomialOrder};

fn main() -> segre::Result<()> {
    let r = Ring::new(["x", "y", "z"])?;
    let cubic = IdealRep::new(3, r.parse_list("x^2 - y, x*y - z")?)?;
    for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
        let basis: Vec<String> = cubic.basis(order).iter().map(|g| r.format(g)).collect();
        println!("{order:?}: {basis:?}");
    }
    println!("dim V = {}", krull_dimension(&cubic));

    // (x^2, x*y) = (x) ∩ (x^2, y) has an embedded line along the z axis
    let i = IdealRep::new(3, r.parse_list("x^2, x*y")?)?;
    let axis = IdealRep::new(3, r.parse_list("x, y")?)?;
    let s = saturate(&i, &axis)?;
    println!(
        "(x^2, x*y) : (x, y)^∞ = {:?}",
        s.grevlex_basis()
            .iter()
            .map(|g| r.format(g))
            .collect::<Vec<_>>()
    );

    let e = eliminate(&cubic, &[0])?;
    println!(
        "eliminating x: {:?}",
        e.grevlex_basis()
            .iter()
            .map(|g| r.format(g))
            .collect::<Vec<_>>()
    );

    let t = Ring::new(["t"])?;
    let image = implicitize(&t.parse_list("t^2, t^3")?)?;
    let xy = Ring::new(["x", "y"])?;
    println!(
        "image of t -> (t^2, t^3): {:?}",
        image
            .grevlex_basis()
            .iter()
            .map(|g| xy.format(g))
            .collect::<Vec<_>>()
    );
    Ok(())
}
