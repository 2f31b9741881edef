mod common;

use common::{gram_nonsingular, random_code};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn lcd_agrees_with_gram_matrix() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..100 {
        let code = random_code(&mut rng);
        let cert = code.is_lcd();
        let oracle = gram_nonsingular(code.field(), &code.generator().row_vecs());
        assert_eq!(cert.lcd, oracle, "{:?}", code.exponents().exponents());
        assert_eq!(cert.complement_size, code.n() - code.k());
        if oracle {
            yes += 1;
        } else {
            no += 1;
        }
    }
    assert!(yes > 0 && no > 0, "suite should exercise both verdicts ({yes} yes, {no} no)");
}
