use num_bigint::BigUint;
use num_rational::BigRational;
use serde::Serializer;

pub fn rational_str<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}

pub fn biguint_str<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(n)
}
