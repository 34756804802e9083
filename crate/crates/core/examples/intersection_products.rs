use segre::algebra::Ring;
use segre::intersect::{
    circ_index, divisor_cut, proper_intersect, tworzewski_index, tworzewski_point_part,
};
use segre::{AffinePoint, CycleRep, IdealRep, TrialConfig};

fn ideal(r: &Ring, text: &str) -> segre::Result<IdealRep> {
    IdealRep::new(r.nvars(), r.parse_list(text)?)
}

fn main() -> segre::Result<()> {
    let r = Ring::new(["x1", "x2", "x3"])?;
    let o = AffinePoint::origin(3);
    let cfg = TrialConfig::default();

    // divisor cuts do not commute
    let h = r.parse("x1")?;
    let cut = divisor_cut(&h, &CycleRep::from_ideal(ideal(&r, "x1*x2")?))?;
    println!("[x1] . [x1*x2] has {} part(s)", cut.parts().len());
    let cut = divisor_cut(&r.parse("x1*x2")?, &CycleRep::from_ideal(ideal(&r, "x1")?))?;
    println!("[x1*x2] . [x1] has {} part(s)", cut.parts().len());

    let tangent = proper_intersect(
        &[
            CycleRep::from_ideal(ideal(&r, "x2 - x1^2, x3")?),
            CycleRep::from_ideal(ideal(&r, "x2")?),
        ],
        &o,
        &cfg,
    )?;
    println!("parabola . tangent plane = {}", tangent.multiplicity);

    let a = ideal(&r, "x2, x3")?;
    let z = CycleRep::from_ideal(ideal(&r, "x2*x1^2 - x3^2")?);
    println!("A o Z: {:?}", circ_index(&a, &z, &o, &cfg)?.by_codim);

    let ac = CycleRep::from_ideal(a);
    let bullet = tworzewski_point_part(&[ac.clone(), z.clone()], &o, &cfg)?;
    println!(
        "A • Z: total {} point {} fixed {}",
        bullet.total,
        bullet.point,
        bullet.fixed.len()
    );

    // the product is not associative
    let pt = CycleRep::point(&o);
    let az = bullet.to_cycle(&o)?;
    let left = tworzewski_point_part(&[pt.clone(), ac.clone()], &o, &cfg)?.to_cycle(&o)?;
    println!(
        "({{0}} • A) • Z total {}",
        tworzewski_index(&[left, z.clone()], &o, &cfg)?.total()
    );
    println!(
        "{{0}} • (A • Z) total {}",
        tworzewski_index(&[pt.clone(), az], &o, &cfg)?.total()
    );
    println!(
        "{{0}} • A • Z total {}",
        tworzewski_index(&[pt, ac, z], &o, &cfg)?.total()
    );
    Ok(())
}
