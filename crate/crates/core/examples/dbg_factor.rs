fn main() {
    use mvlimit_core::numeric::unifactor::factor_unipoly;
    use mvlimit_core::numeric::unipoly::UniPoly;
    use mvlimit_core::numeric::rat_int;
    let p = |cs: &[i64]| UniPoly::from_coeffs(cs.iter().map(|&c| rat_int(c)).collect());
    let f = p(&[-4, 0, 1]);
    let fs = factor_unipoly(&f);
    for (g, m) in &fs {
        println!("factor: {} mult {}", g.to_string_in("x"), m);
    }
}
