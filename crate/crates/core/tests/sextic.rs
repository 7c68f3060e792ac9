use charseq::pointlab::construct::{grid_curve, random_conic, random_form};
use charseq::pointlab::curve::rational_points;
use charseq::pointlab::{measure_rcs, PointGroup, PrimeField, ProjPoint};
use charseq::realize::{add_case, add_witnesses, can_add_at_level, filtration_points};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Setup {
    grid: charseq::pointlab::construct::GridSection,
    pool: Vec<ProjPoint>,
    line_pts: Vec<ProjPoint>,
    conic_pts: Vec<ProjPoint>,
    others: Vec<ProjPoint>,
}

fn setup(seed: u64) -> Setup {
    let f = PrimeField::new(10007).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let line = random_form(f, 1, &mut rng);
    let conic = random_conic(f, &mut rng);
    let grid = grid_curve(f, 6, &[line, conic], &mut rng).unwrap();
    let pool = rational_points(&grid.curve).unwrap();
    let line_pts = grid.per_factor[0].points().to_vec();
    let conic_pts = grid.per_factor[1].points().to_vec();
    let mut others: Vec<ProjPoint> = pool
        .iter()
        .copied()
        .filter(|q| !line_pts.contains(q) && !conic_pts.contains(q) && !grid.curve.is_singular_at(q))
        .collect();
    others.shuffle(&mut rng);
    Setup {
        grid,
        pool,
        line_pts,
        conic_pts,
        others,
    }
}

#[test]
fn aligned_configuration_blocks_the_level_five_addition() {
    let s = setup(1);
    let x = &s.grid.curve;
    let f = x.field();
    let mut pts = s.line_pts[..5].to_vec();
    pts.extend_from_slice(&s.others[..4]);
    let y = PointGroup::new(f, pts).unwrap();
    let rel = measure_rcs(x, &y).unwrap();
    assert_eq!(rel.entries, vec![3, 3, 4, 4, 5, 5]);
    assert_eq!(add_case(&rel, 5).unwrap().entries, vec![3, 3, 4, 5, 5, 5]);
    assert_eq!(can_add_at_level(x, &y, 5, Some(&s.pool)).unwrap(), None);

    // Y_3 = Y_4 = Y plus the sixth point of the line.
    let y3 = filtration_points(x, &y, 3, Some(&s.pool)).unwrap();
    let y4 = filtration_points(x, &y, 4, Some(&s.pool)).unwrap();
    assert_eq!(y3.sorted(), y4.sorted());
    assert_eq!(y3.len(), 10);
    assert!(y3.contains(&s.line_pts[5]));
}

#[test]
fn conic_configuration_allows_it() {
    let s = setup(2);
    let x = &s.grid.curve;
    let f = x.field();
    let mut pts = s.conic_pts[..8].to_vec();
    pts.push(s.others[0]);
    let y = PointGroup::new(f, pts).unwrap();
    let rel = measure_rcs(x, &y).unwrap();
    assert_eq!(rel.entries, vec![3, 3, 4, 4, 5, 5]);

    // Cubics through Y contain the conic; quartics cut out Y itself.
    let y3 = filtration_points(x, &y, 3, Some(&s.pool)).unwrap();
    let mut expected: Vec<ProjPoint> = s.conic_pts.clone();
    expected.push(s.others[0]);
    expected.sort_unstable();
    assert_eq!(y3.sorted().points(), &expected[..]);
    let y4 = filtration_points(x, &y, 4, Some(&s.pool)).unwrap();
    assert_eq!(y4.sorted(), y.sorted());

    let witnesses = add_witnesses(x, &y, 5, Some(&s.pool)).unwrap();
    let mut rest = s.conic_pts[8..].to_vec();
    rest.sort_unstable();
    assert_eq!(witnesses, rest);
    let q = can_add_at_level(x, &y, 5, Some(&s.pool)).unwrap().unwrap();
    let bigger = y.with_point(q).unwrap();
    let target = measure_rcs(x, &bigger).unwrap();
    assert_eq!(target.entries, vec![3, 3, 4, 5, 5, 5]);

    let mut nine = s.conic_pts[..9].to_vec();
    nine.push(s.others[1]);
    let other = PointGroup::new(f, nine).unwrap();
    assert_eq!(measure_rcs(x, &other).unwrap(), target);
}
