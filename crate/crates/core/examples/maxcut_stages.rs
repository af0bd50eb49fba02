use polyopt::arith::{rat, rat_i, AlgebraicNumber, SturmChain};
use polyopt::groebner::Ideal;
use polyopt::mpoly::{MPoly, Ring};
use polyopt::zerodim::{image_annihilator, real_points, rur};
use std::time::Instant;

fn main() {
    let r = Ring::new(vec!["x1", "x2", "x3", "x4", "x5"]);
    let x: Vec<MPoly> = (0..5).map(|i| MPoly::var(&r, i)).collect();
    let w = |i: usize, j: usize, c: polyopt::arith::Rational| x[i].mul(&x[j]).scale(&c);
    let f = MPoly::constant(&r, rat_i(-98))
        .add(&w(0, 1, rat(23, 2))).add(&w(0, 2, rat_i(8))).add(&w(0, 3, rat_i(9))).add(&w(0, 4, rat(17, 2)))
        .add(&w(1, 2, rat(25, 2))).add(&w(1, 3, rat_i(13))).add(&w(1, 4, rat(23, 2)))
        .add(&w(2, 3, rat_i(7))).add(&w(2, 4, rat_i(12))).add(&w(3, 4, rat_i(5)));
    let cons: Vec<MPoly> = (0..5).map(|i| x[i].pow(2).sub(&MPoly::one(&r))).collect();
    let ideal = Ideal::new(&r, cons);

    let t = Instant::now(); let d = ideal.dimension(); println!("dimension={d}: {:?}", t.elapsed());
    let t = Instant::now(); let p = rur(&ideal, 0).unwrap(); println!("rur (deg {}): {:?}", p.degree(), t.elapsed());
    let t = Instant::now(); let chain = SturmChain::new(&p.q); println!("sturm chain: {:?}", t.elapsed());
    let t = Instant::now(); let nroots = chain.count_real_roots(); println!("count={nroots}: {:?}", t.elapsed());
    let t = Instant::now(); let pts = real_points(&p, &rat(1, 16)); println!("real_points({}): {:?}", pts.len(), t.elapsed());
    let t = Instant::now(); let ann = image_annihilator(&f, &p); println!("image_annihilator (deg {}): {:?}", ann.degree(), t.elapsed());
    let t = Instant::now(); let roots = AlgebraicNumber::roots_of(&ann); println!("roots_of({}): {:?}", roots.len(), t.elapsed());
}
