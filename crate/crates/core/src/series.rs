//! Series coefficient tables for the cancellation-prone evaluations.
//!
//! All coefficients are exact rationals computed symbolically and rounded
//! once to the nearest binary64; regenerate with `tools/gen_reference.py
//! series`. The rational values appear in the generator's output.

/// Coefficients of `(x - (1+x^2)^(1/6) * arcsinh(x)) / x^5` in powers of
/// `y = x^2`. This is the shared numerator of both blend-ratio functions;
/// the direct form loses all significant digits as `x -> 0` because the
/// difference is O(x^5) while both terms are O(x).
pub(crate) const MEAN_GAP_SERIES: [f64; 12] = [
    0.022222222222222223,
    -0.021869488536155203,
    0.019400352733686066,
    -0.017030979993942957,
    0.015041047962858663,
    -0.013405829043689126,
    0.012057927020674809,
    -0.010935901936853185,
    0.00999130515242626,
    -0.00918725445487846,
    0.00849579543761638,
    -0.007895603576829262,
];

/// QA-family defect series: `f(p, s) = sum_k c_k(p) s^(5+2k)` where
/// `s = sqrt(t^6 - 1)`. Row `k` holds the coefficients of `c_k` as a
/// polynomial in `p`, ascending degree. Leading term `c_0 = (5p-4)/180`.
pub(crate) const DEFECT_QA_SERIES: [[f64; 7]; 11] = [
    [-0.022222222222222223, 0.027777777777777776, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.025573192239858905, -0.030864197530864196, 0.0, 0.0, 0.0, 0.0, 0.0],
    [-0.025205761316872428, 0.03041409465020576, -0.0007716049382716049, 0.0, 0.0, 0.0, 0.0],
    [0.023950929043521637, -0.029213820301783263, 0.0015860768175582991, 0.0, 0.0, 0.0, 0.0],
    [-0.022536561470460646, 0.027894768804298125, -0.002302907331199512, 2.143347050754458e-05, 0.0, 0.0, 0.0],
    [0.021175752870497385, -0.026629896357262612, 0.0029082044149773916, -6.430041152263375e-05, 0.0, 0.0, 0.0],
    [-0.019928316909722535, 0.025465144967990037, -0.0034151944716993513, 0.00012358975702382767, -5.953741807651273e-07, 0.0, 0.0],
    [0.018803682553903137, -0.024406520596033845, 0.0038408100625087027, -0.00019428676584042255, 2.3484203796846688e-06, 0.0, 0.0],
    [-0.017794515266555632, 0.02344720281357265, -0.00420015206946871, 0.0002724226978781707, -5.620222011944882e-06, 1.65381716879202e-08, 0.0],
    [0.01688862436346963, -0.02257683759312854, 0.0045055549613315605, -0.0003550766006501728, 1.0586318498640698e-05, -8.085328380760987e-08, 0.0],
    [-0.01607330449204907, 0.02178483891323801, -0.0047668289132999945, 0.0004401587267898271, -1.7290226045814122e-05, 2.316237301754935e-07, -4.593936579977834e-10],
];

/// CA-family defect series, same layout. Leading term `d_0 = (25p-8)/360`.
pub(crate) const DEFECT_CA_SERIES: [[f64; 7]; 11] = [
    [-0.022222222222222223, 0.06944444444444445, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.025573192239858905, -0.06558641975308642, 0.0, 0.0, 0.0, 0.0, 0.0],
    [-0.025205761316872428, 0.059638631687242795, -0.004822530864197531, 0.0, 0.0, 0.0, 0.0],
    [0.023950929043521637, -0.05449995713305898, 0.008305469821673525, 0.0, 0.0, 0.0, 0.0],
    [-0.022536561470460646, 0.05026461405464106, -0.010731619608291419, 0.0003348979766803841, 0.0, 0.0, 0.0],
    [0.021175752870497385, -0.046757488021071485, 0.01245770858735965, -0.0008372449417009602, 0.0, 0.0, 0.0],
    [-0.019928316909722535, 0.04381328259041881, -0.013715989539341797, 0.0014054861845405934, -2.3256803936137783e-05, 0.0, 0.0],
    [0.018803682553903137, -0.04130574408711422, 0.014652280615070188, -0.00198796001714707, 7.623063512400719e-05, 0.0, 0.0],
    [-0.017794515266555632, 0.03914172745695206, -0.015360236083491139, 0.0025592498872228386, -0.00015752177851189618, 1.6150558288984572e-06, 0.0],
    [0.01688862436346963, -0.03725231099172059, 0.01590193278979851, -0.003107339041659341, 0.0002631197115143155, -6.5499486394215206e-06, 0.0],
    [-0.01607330449204907, 0.035585808013696256, -0.016319791157261978, 0.0036271127730015933, -0.00038858016160687195, 1.607703337084799e-05, -1.1215665478461508e-07],
];

/// Horner evaluation of a coefficient array in ascending degree.
pub(crate) fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Evaluate one of the defect series at parameter `p` and `s < 1`:
/// `s^5 * sum_k c_k(p) (s^2)^k`.
pub(crate) fn defect_series(table: &[[f64; 7]; 11], p: f64, s: f64) -> f64 {
    let y = s * s;
    let mut acc = 0.0;
    for row in table.iter().rev() {
        acc = acc * y + horner(row, p);
    }
    acc * y * y * s // acc * s^5
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn horner_matches_naive() {
        let c = [1.0, -2.0, 3.0];
        let x = 0.37;
        assert_eq!(horner(&c, x), 1.0 - 2.0 * x + 3.0 * x * x);
    }

    #[test]
    fn defect_leading_terms_vanish_at_sharp_parameters() {
        // c0(4/5) = (5*4/5 - 4)/180 = 0, d0(8/25) = (25*8/25 - 8)/360 = 0
        assert_eq!(horner(&DEFECT_QA_SERIES[0], 0.8), 0.0);
        assert_eq!(horner(&DEFECT_CA_SERIES[0], 8.0 / 25.0), 0.0);
    }
}
