use super::ConstructionError;
use crate::caloric::basic_hcp;
use crate::{parse_poly, RatPoly};

const N2D3: &str = "150*t*(3*x + y) + 27*x^3 + 267*x^2*y + 144*x*y^2 - 64*y^3";
const N2D4: &str =
    "7500*t^2 + 150*t*(37*x^2 - 7*x*y + 13*y^2) + 192*x^4 + 176*x^3*y + 1623*x^2*y^2 - 351*x*y^3 - 108*y^4";
const N3D4: &str = "12*t^2 + 12*t*x^2 + x^4 + y^4 - 6*y^2*z^2 + z^4";
const PROD_N2D4: &str = "(2*t + x^2)*(2*t + y^2)";

/// Fixture ids accepted by [`fixture`], besides the `deg2_n{n}_j{j}` and
/// `basic_{d}` patterns.
pub const NAMED_FIXTURES: [&str; 5] = ["deg2", "n2d3", "n2d4", "n3d4", "prod_n2d4"];

/// Largest degree served by the `basic_{d}` fixtures.
pub const MAX_BASIC_FIXTURE: u32 = 8;

fn unknown(id: &str) -> ConstructionError {
    ConstructionError::UnknownFixture(id.to_string())
}

/// `2t + x_j^2` in `n` space variables, `j` counted from 1.
fn deg2(n: usize, j: usize) -> Result<RatPoly, ConstructionError> {
    if n == 0 || j == 0 || j > n {
        return Err(ConstructionError::Precondition(format!("deg2 needs 1 <= j <= n, got n = {n}, j = {j}")));
    }
    let p = &RatPoly::t(n).scale(&crate::scalar::rat(2, 1)) + &RatPoly::x(n, j - 1).pow(2);
    Ok(p)
}

/// Integer- or rational-coefficient polynomials printed as examples.
///
/// Ids: `deg2` (`2t + x^2`), `deg2_n{n}_j{j}` (`2t + x_j^2`), `n2d3`,
/// `n2d4`, `n3d4`, `prod_n2d4` and `basic_{d}` for `d <= 8`.
pub fn fixture(id: &str) -> Result<RatPoly, ConstructionError> {
    let parsed = |text: &str, n: usize| parse_poly(text, n).map_err(|e| ConstructionError::Poly(e.into()));
    match id {
        "deg2" => deg2(1, 1),
        "n2d3" => parsed(N2D3, 2),
        "n2d4" => parsed(N2D4, 2),
        "n3d4" => parsed(N3D4, 3),
        "prod_n2d4" => parsed(PROD_N2D4, 2),
        _ => {
            if let Some(d) = id.strip_prefix("basic_") {
                let d: u32 = d.parse().map_err(|_| unknown(id))?;
                if d > MAX_BASIC_FIXTURE {
                    return Err(unknown(id));
                }
                return Ok(basic_hcp(d));
            }
            if let Some(rest) = id.strip_prefix("deg2_n") {
                let (n, j) = rest.split_once("_j").ok_or_else(|| unknown(id))?;
                let n = n.parse().map_err(|_| unknown(id))?;
                let j = j.parse().map_err(|_| unknown(id))?;
                return deg2(n, j);
            }
            Err(unknown(id))
        }
    }
}
