use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::Scalar;

/// Element of Q(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: Scalar,
    pub im: Scalar,
}

impl Gaussian {
    pub const ZERO: Gaussian = Gaussian {
        re: Scalar::ZERO,
        im: Scalar::ZERO,
    };
    pub const ONE: Gaussian = Gaussian {
        re: Scalar::ONE,
        im: Scalar::ZERO,
    };
    pub const I: Gaussian = Gaussian {
        re: Scalar::ZERO,
        im: Scalar::ONE,
    };

    pub fn new(re: Scalar, im: Scalar) -> Gaussian {
        Gaussian { re, im }
    }

    pub fn real(re: Scalar) -> Gaussian {
        Gaussian {
            re,
            im: Scalar::ZERO,
        }
    }

    pub fn int(re: i64, im: i64) -> Gaussian {
        Gaussian {
            re: Scalar::int(re),
            im: Scalar::int(im),
        }
    }

    pub fn conj(&self) -> Gaussian {
        Gaussian {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn norm(&self) -> Scalar {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn recip(&self) -> Option<Gaussian> {
        let n = self.norm().recip()?;
        Some(Gaussian {
            re: &self.re * &n,
            im: -(&self.im * &n),
        })
    }
}

fn add_ref(a: &Gaussian, b: &Gaussian) -> Gaussian {
    Gaussian {
        re: &a.re + &b.re,
        im: &a.im + &b.im,
    }
}

fn sub_ref(a: &Gaussian, b: &Gaussian) -> Gaussian {
    Gaussian {
        re: &a.re - &b.re,
        im: &a.im - &b.im,
    }
}

fn mul_ref(a: &Gaussian, b: &Gaussian) -> Gaussian {
    if a.im.is_zero() && b.im.is_zero() {
        return Gaussian::real(&a.re * &b.re);
    }
    Gaussian {
        re: &a.re * &b.re - &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
    }
}

fn div_ref(a: &Gaussian, b: &Gaussian) -> Gaussian {
    mul_ref(a, &b.recip().expect("division by zero gaussian"))
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $f:ident) => {
        impl $tr<Gaussian> for Gaussian {
            type Output = Gaussian;
            fn $method(self, rhs: Gaussian) -> Gaussian {
                $f(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a Gaussian> for Gaussian {
            type Output = Gaussian;
            fn $method(self, rhs: &'a Gaussian) -> Gaussian {
                $f(&self, rhs)
            }
        }
        impl<'a> $tr<Gaussian> for &'a Gaussian {
            type Output = Gaussian;
            fn $method(self, rhs: Gaussian) -> Gaussian {
                $f(self, &rhs)
            }
        }
        impl<'a, 'b> $tr<&'b Gaussian> for &'a Gaussian {
            type Output = Gaussian;
            fn $method(self, rhs: &'b Gaussian) -> Gaussian {
                $f(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl From<Scalar> for Gaussian {
    fn from(s: Scalar) -> Gaussian {
        Gaussian::real(s)
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.signum() < 0 => write!(f, "{}-{}i", self.re, -&self.im),
            (false, false) => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&Gaussian::I * &Gaussian::I, -Gaussian::ONE);
    }

    #[test]
    fn inverse() {
        let z = Gaussian::int(3, -4);
        assert_eq!(&z * &z.recip().unwrap(), Gaussian::ONE);
        assert_eq!(z.norm(), Scalar::int(25));
        assert!(Gaussian::ZERO.recip().is_none());
        assert_eq!(z.to_string(), "3-4i");
    }
}
