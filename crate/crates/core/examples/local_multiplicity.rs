use segre::algebra::Ring;
use segre::local::{colength, local_dim_mult, tangent_cone};
use segre::{AffinePoint, IdealRep};

fn main() -> segre::Result<()> {
    let r = Ring::new(["z1", "z2"])?;
    let origin = AffinePoint::origin(2);
    for (a, b) in [(2, 3), (3, 4), (5, 7)] {
        let cusp = IdealRep::new(2, vec![r.parse(&format!("z1^{a} - z2^{b}"))?])?;
        let lm = local_dim_mult(&cusp, &origin)?;
        let cone: Vec<String> = tangent_cone(&cusp)
            .generators()
            .iter()
            .map(|g| r.format(g))
            .collect();
        println!(
            "z1^{a} - z2^{b}: dim {} mult {} tangent cone {cone:?}",
            lm.local_dim, lm.mult
        );
    }

    let node = IdealRep::new(2, vec![r.parse("z2^2 - z1^2*(z1 + 1)")?])?;
    println!("node at 0: {:?}", local_dim_mult(&node, &origin)?);
    println!(
        "node at (-1, 0): {:?}",
        local_dim_mult(&node, &AffinePoint::from_integers(&[-1, 0]))?
    );

    let fat = IdealRep::new(2, r.parse_list("z1^3, z1*z2, z2^2")?)?;
    println!("colength of (z1^3, z1*z2, z2^2) = {}", colength(&fat)?);
    Ok(())
}
