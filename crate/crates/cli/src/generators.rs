//! Built-in truth-table generators for the benchmark circuits.
//!
//! Generators are pure: repeated calls return identical tables.
//!
//! - `halfadd`: sum = (a+b) mod 4, carry = 1 when a+b >= 4.
//! - `fulladd`: as `halfadd` with a carry-in taken modulo 2, so the table
//!   stays complete over all 64 input vectors.
//! - `sum2`: (a+b) mod 4, single output.
//! - `mul2`: the GF(4) product.

use qsynth4_core::gf4::{gf4_mul, Gf4Value};
use qsynth4_core::QuaternaryFunction;

pub const BUILTIN_NAMES: [&str; 4] = ["halfadd", "fulladd", "sum2", "mul2"];

fn g(v: u8) -> Gf4Value {
    Gf4Value::from_u8(v)
}

pub fn halfadd() -> QuaternaryFunction {
    QuaternaryFunction::from_fn(2, 2, |ins| {
        let total = ins[0].value() + ins[1].value();
        vec![g(total % 4), g(u8::from(total >= 4))]
    })
    .expect("generator tables are complete")
    .with_name("halfadd")
}

pub fn fulladd() -> QuaternaryFunction {
    QuaternaryFunction::from_fn(3, 2, |ins| {
        let cin = ins[2].value() % 2;
        let total = ins[0].value() + ins[1].value() + cin;
        vec![g(total % 4), g(u8::from(total >= 4))]
    })
    .expect("generator tables are complete")
    .with_name("fulladd")
}

pub fn sum2() -> QuaternaryFunction {
    QuaternaryFunction::from_fn(2, 1, |ins| {
        vec![g((ins[0].value() + ins[1].value()) % 4)]
    })
    .expect("generator tables are complete")
    .with_name("sum2")
}

pub fn mul2() -> QuaternaryFunction {
    QuaternaryFunction::from_fn(2, 1, |ins| vec![gf4_mul(ins[0], ins[1])])
        .expect("generator tables are complete")
        .with_name("mul2")
}

pub fn builtin(name: &str) -> Option<QuaternaryFunction> {
    match name {
        "halfadd" => Some(halfadd()),
        "fulladd" => Some(fulladd()),
        "sum2" => Some(sum2()),
        "mul2" => Some(mul2()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halfadd_rows() {
        let f = halfadd();
        assert_eq!(f.eval(&[g(3), g(2)]).unwrap(), &[g(1), g(1)]);
        assert_eq!(f.eval(&[g(1), g(2)]).unwrap(), &[g(3), g(0)]);
        assert_eq!(f.eval(&[g(0), g(0)]).unwrap(), &[g(0), g(0)]);
    }

    #[test]
    fn fulladd_carry_in_is_binary() {
        let f = fulladd();
        // Carry-in values 2 and 3 behave as 0 and 1.
        assert_eq!(
            f.eval(&[g(1), g(1), g(2)]).unwrap(),
            f.eval(&[g(1), g(1), g(0)]).unwrap()
        );
        assert_eq!(
            f.eval(&[g(3), g(3), g(3)]).unwrap(),
            f.eval(&[g(3), g(3), g(1)]).unwrap()
        );
        assert_eq!(f.eval(&[g(3), g(3), g(1)]).unwrap(), &[g(3), g(1)]);
    }

    #[test]
    fn generators_are_deterministic() {
        for name in BUILTIN_NAMES {
            let a = builtin(name).unwrap().to_qtt();
            let b = builtin(name).unwrap().to_qtt();
            assert_eq!(a, b, "{name}");
        }
        assert!(builtin("nope").is_none());
    }

    #[test]
    fn mul2_is_the_field_product() {
        let f = mul2();
        assert_eq!(f.eval(&[g(2), g(2)]).unwrap(), &[g(3)]);
        assert_eq!(f.eval(&[g(2), g(3)]).unwrap(), &[g(1)]);
    }
}
