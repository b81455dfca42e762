//! Catalog entries, grouped by class.
//!
//! Sums written `2*sum(r=1..inf, (-1)^(r-1)*a(r))` with non-vanishing `a`
//! are read as twice the Abel value of the alternating series, which is the
//! limit of `S_{2N-1} + S_{2N}` whenever that limit exists.

use super::IdentityClass::{AlternatingPaired as A, FiniteExact as F, InfiniteSeries as I, PowerSeries as P, Reference as R};
use super::{Entry, ParamSpec};

const N: (&str, ParamSpec) = ("N", ParamSpec::Int(1, 50));
const ORD_N: (&str, ParamSpec) = ("n", ParamSpec::Int(-2, 6));
const ORD_M: (&str, ParamSpec) = ("m", ParamSpec::Int(-2, 6));
const PAIR_M: (&str, ParamSpec) = ("m", ParamSpec::Int(0, 4));
const PAIR_N: (&str, ParamSpec) = ("n", ParamSpec::Int(0, 4));
const OFF_A: (&str, ParamSpec) = ("a", ParamSpec::Int(0, 3));
const OFF_B: (&str, ParamSpec) = ("b", ParamSpec::Int(0, 3));
const Z: (&str, ParamSpec) = ("z", ParamSpec::Rats(&["1/10", "1/4", "1/2", "7/10"]));
/// Convergent orders of `Σ 1/r^n`-type sums.
const CONV_N: (&str, ParamSpec) = ("n", ParamSpec::Int(2, 6));
const CONV_M: (&str, ParamSpec) = ("m", ParamSpec::Int(2, 6));

const NONE: &[(&str, &[i64])] = &[];
const MN23: &[(&str, &[i64])] = &[("m", &[2, 3]), ("n", &[2, 3])];

macro_rules! entry {
    ($id:literal, $class:expr, [$($p:expr),*], $lhs:literal, $rhs:literal, $anchor:literal) => {
        entry!($id, $class, [$($p),*], $lhs, $rhs, $anchor, NONE)
    };
    ($id:literal, $class:expr, [$($p:expr),*], $lhs:literal, $rhs:literal, $anchor:literal, $num:expr) => {
        Entry { id: $id, class: $class, params: &[$($p),*], lhs: $lhs, rhs: $rhs, anchor: $anchor, numeric: $num }
    };
}

pub(crate) const ENTRIES: &[Entry] = &[
    // ------------------------------------------------------------------
    // parity split and the h <-> H reductions
    entry!("F.N9VEF9K", F, [("r", ParamSpec::Int(1, 50)), ORD_M],
        "H(r,m)",
        "H((r-parity(r))/2,m)/2^m + h((r+parity(r))/2,m)",
        "split of H_{r,m} into even and odd denominators"),
    entry!("F.HROI36F", F, [("N", ParamSpec::Int(0, 50)), ORD_M],
        "h(N,m)",
        "H(2*N,m) - H(N,m)/2^m",
        "h_{N,m} from H at 2N"),
    entry!("F.N30DCB4", F, [N, ORD_M],
        "h(N,m)",
        "H(2*N-1,m) - H(N-1,m)/2^m",
        "h_{N,m} from H at 2N-1"),
    // ------------------------------------------------------------------
    // sums of H_{r,n} with polynomial weights
    entry!("F.KB1GFMQ", F, [N, ORD_N],
        "sum(r=1..N, H(r,n))",
        "(N+1)*H(N,n) - H(N,n-1)",
        "sum of H_{r,n}"),
    entry!("F.PREDWNS", F, [N, ORD_N],
        "2*sum(r=1..N, r*H(r,n))",
        "N*(N+1)*H(N,n) + H(N,n-1) - H(N,n-2)",
        "sum of r H_{r,n}"),
    entry!("F.WVL7W5T", F, [N],
        "sum(r=1..N, H(r,1))",
        "(N+1)*H(N,1) - N",
        "sum of H_r"),
    entry!("F.IF494A6", F, [N],
        "sum(r=1..N, r*H(r,1))",
        "N*(N+1)*H(N,1)/2 - N*(N-1)/4",
        "sum of r H_r"),
    entry!("F.R2HN", F, [N, ORD_N],
        "sum(r=1..N, r^2*H(r,n))",
        "N*(N+1)*(2*N+1)*H(N,n)/6 - H(N,n-1)/6 + H(N,n-2)/2 - H(N,n-3)/3",
        "sum of r^2 H_{r,n}"),
    entry!("F.R2H1", F, [N],
        "sum(r=1..N, r^2*H(r,1))",
        "N*(N+1)*(2*N+1)*H(N,1)/6 - N*(N-1)*(4*N+1)/36",
        "sum of r^2 H_r"),
    entry!("F.UO7JLJO", F, [N, ORD_N],
        "sum(r=1..N, H(r,n)^2)",
        "(N+1)*H(N,n)^2 + H(N,2*n-1) - 2*sum(r=1..N, H(r,n)/r^(n-1))",
        "sum of H_{r,n}^2"),
    entry!("F.HGTFTRE", F, [N],
        "sum(r=1..N, H(r,1)^2)",
        "(N+1)*H(N,1)^2 - (2*N+1)*H(N,1) + 2*N",
        "sum of H_r^2"),
    entry!("F.EVENH", F, [N, ORD_N],
        "2*sum(r=1..N, H(2*r,n))",
        "2*(N+1)*H(2*N,n) - H(2*N,n-1) - h(N,n)",
        "sum of H_{2r,n}"),
    // ------------------------------------------------------------------
    // h_{r,m} sums
    entry!("F.AFC1DNP", F, [N, PAIR_M, PAIR_N],
        "sum(r=1..N, h(r,m)/r^n) + sum(r=1..N, H(r-1,n)/(2*r-1)^m)",
        "h(N,m)*H(N,n)",
        "mixed h and H product"),
    entry!("F.F7D4YF6", F, [N, ORD_M],
        "sum(r=1..N, h(r,m))",
        "(N+1/2)*h(N,m) - h(N,m-1)/2",
        "sum of h_{r,m}"),
    entry!("F.CECLNNV", F, [N],
        "sum(r=1..N, h(r,1))",
        "(N+1/2)*h(N,1) - N/2",
        "sum of h_r"),
    entry!("F.EVENSH", F, [N, ORD_N],
        "4*sum(r=1..N, h(2*r,n))",
        "2*(2*N+1)*h(2*N,n) - h(2*N,n-1) - hbar(2*N,n)",
        "sum of h_{2r,n}"),
    entry!("F.BGFRDSE", F, [N, ORD_M],
        "sum(r=1..N, r*h(r,m))",
        "(N*(N+1)/2 + 1/8)*h(N,m) - h(N,m-2)/8",
        "sum of r h_{r,m}"),
    entry!("F.FDJL12H", F, [N],
        "sum(r=1..N, r*h(r,1))",
        "(N*(N+1)/2 + 1/8)*h(N,1) - N^2/8",
        "sum of r h_r"),
    entry!("F.RIKV1U5", F, [N, ORD_N],
        "2*sum(r=1..N, h(r,n)^2)",
        "(2*N+1)*h(N,n)^2 + h(N,2*n-1) - 2*sum(r=1..N, h(r,n)/(2*r-1)^(n-1))",
        "sum of h_{r,n}^2"),
    entry!("F.X0K3M6M", F, [N],
        "2*sum(r=1..N, h(r,1)^2)",
        "(2*N+1)*h(N,1)^2 - 2*N*h(N,1) + N",
        "sum of h_r^2"),
    // ------------------------------------------------------------------
    // quadratic forms from products H_r H_s and h_r h_s
    entry!("F.GY3KCCL", F, [N],
        "2*sum(r=1..N, H(r,1)*sum(s=1..r, H(s,1)))",
        "sum(r=1..N, H(r,1)^2) + sum(r=1..N, H(r,1))^2",
        "nested sum of H_r H_s"),
    entry!("F.RH1SQ", F, [N],
        "sum(r=1..N, r*H(r,1)^2)",
        "N*(N+1)/2*H(N,1)^2 - (N^2-N-1)/2*H(N,1) + N*(N-3)/4",
        "sum of r H_r^2"),
    entry!("F.XFZ3K3Z", F, [N],
        "2*sum(r=1..N, h(r,1)*sum(s=1..r, h(s,1)))",
        "sum(r=1..N, h(r,1)^2) + sum(r=1..N, h(r,1))^2",
        "nested sum of h_r h_s"),
    entry!("F.RSH1SQ", F, [N],
        "sum(r=1..N, r*h(r,1)^2)",
        "(2*N+1)^2/8*h(N,1)^2 - (2*N+1)*(2*N-1)/16*h(N,1) + N^2/16",
        "sum of r h_r^2"),
    // ------------------------------------------------------------------
    // factorable summands with shifts and powers
    entry!("F.L7BKFC5", F,
        [("N", ParamSpec::Int(1, 6)), ("x", ParamSpec::Rats(&["1/2", "3/2"])), ("y", ParamSpec::Rats(&["2/3"])),
         ("p", ParamSpec::Int(0, 2)), ("q", ParamSpec::Int(1, 2)), ("a", ParamSpec::Int(0, 1)), ("b", ParamSpec::Int(0, 1)),
         ("m", ParamSpec::Int(1, 2)), ("n", ParamSpec::Int(0, 1))],
        "sum(r=1..N, x^(p*r)/(r+a)^m*sum(s=1..r, y^(q*s)/(s+b)^n)) + sum(r=1..N, y^(q*r)/(r+b)^n*sum(s=1..r, x^(p*s)/(s+a)^m))",
        "sum(r=1..N, (x^p*y^q)^r/((r+a)^m*(r+b)^n)) + sum(r=1..N, x^(p*r)/(r+a)^m)*sum(r=1..N, y^(q*r)/(r+b)^n)",
        "general factorable summand with geometric weights"),
    entry!("F.IVTC0SC", F, [("N", ParamSpec::Int(1, 20)), OFF_A, OFF_B, PAIR_M, PAIR_N],
        "sum(r=1..N, H(r+b,n)/(r+a)^m) + sum(r=1..N, H(r+a,m)/(r+b)^n)",
        "H(N+a,m)*H(N+b,n) - H(a,m)*H(b,n) + sum(r=1..N, 1/((r+a)^m*(r+b)^n))",
        "shifted H product"),
    entry!("F.YBDHKK3", F, [N, PAIR_M, PAIR_N],
        "sum(r=1..N, H(r,n)/r^m) + sum(r=1..N, H(r,m)/r^n)",
        "H(N,m+n) + H(N,m)*H(N,n)",
        "symmetric H_{r,n}/r^m sum"),
    entry!("F.ITN3I7S", F, [N, PAIR_M, PAIR_N],
        "sum(r=1..N, H(r,n)/(r+1)^m) + sum(r=1..N, H(r,m)/(r+1)^n)",
        "H(N+1,n)*H(N+1,m) - H(N,n+m) - 1/((N+1)^n*(N+1)^m)",
        "symmetric H_{r,n}/(r+1)^m sum"),
    entry!("F.MIXSHIFT", F, [N, PAIR_M, PAIR_N],
        "sum(r=1..N, H(r,n)/(r+1)^m) + sum(r=1..N, H(r,m)/r^n)",
        "H(N+1,m)*H(N,n)",
        "one-sided shifted H sum"),
    entry!("F.F2V2VWE", F, [N, ORD_N],
        "2*sum(r=1..N, H(r,n)/r^n)",
        "H(N,2*n) + H(N,n)^2",
        "diagonal H_{r,n}/r^n sum"),
    entry!("F.QUHF1KU", F, [N, ORD_N],
        "2*sum(r=1..N, H(r,n)/(r+1)^n)",
        "H(N,n)^2 - H(N,2*n) + 2*H(N,n)/(N+1)^n",
        "diagonal H_{r,n}/(r+1)^n sum"),
    entry!("F.D7W4DCO", F, [("N", ParamSpec::Int(1, 20)), OFF_A, OFF_B, PAIR_M, PAIR_N],
        "sum(r=1..N, h(r+b,n)/(2*r+2*a-1)^m) + sum(r=1..N, h(r+a,m)/(2*r+2*b-1)^n)",
        "h(N+a,m)*h(N+b,n) - h(a,m)*h(b,n) + sum(r=1..N, 1/((2*r+2*a-1)^m*(2*r+2*b-1)^n))",
        "shifted h product"),
    entry!("F.VSE99JU", F, [N, PAIR_M, PAIR_N],
        "sum(r=1..N, h(r,n)/(2*r-1)^m) + sum(r=1..N, h(r,m)/(2*r-1)^n)",
        "h(N,n+m) + h(N,m)*h(N,n)",
        "symmetric h_{r,n}/(2r-1)^m sum"),
    entry!("F.NRL5EK4", F, [N, PAIR_M, PAIR_N],
        "sum(r=1..N, h(r,n)/(2*r+1)^m) + sum(r=1..N, h(r,m)/(2*r+1)^n)",
        "h(N+1,n)*h(N+1,m) - h(N,n+m) - 1/((2*N+1)^n*(2*N+1)^m)",
        "symmetric h_{r,n}/(2r+1)^m sum"),
    entry!("F.HYN439V", F, [N, PAIR_M, PAIR_N],
        "sum(r=1..N, h(r,n)/(2*r+1)^m) + sum(r=1..N, h(r,m)/(2*r-1)^n)",
        "h(N+1,m)*h(N,n)",
        "one-sided shifted h sum"),
    entry!("F.R00MPZH", F, [N, ORD_N],
        "2*sum(r=1..N, h(r,n)/(2*r-1)^n)",
        "h(N,2*n) + h(N,n)^2",
        "diagonal h_{r,n}/(2r-1)^n sum"),
    entry!("F.WFA9YP1", F, [N, ORD_N],
        "2*sum(r=1..N, h(r,n)/(2*r+1)^n)",
        "h(N,n)^2 - h(N,2*n) + 2*h(N,n)/(2*N+1)^n",
        "diagonal h_{r,n}/(2r+1)^n sum"),
    entry!("F.SUMPM", F, [N, ORD_N],
        "sum(r=1..N, h(r,n)/(2*r-1)^n) + sum(r=1..N, h(r,n)/(2*r+1)^n)",
        "h(N,n)^2 + h(N,n)/(2*N+1)^n",
        "sum of the two diagonal h forms"),
    entry!("F.DIFFPM", F, [N, ORD_N],
        "sum(r=1..N, h(r,n)/(2*r-1)^n) - sum(r=1..N, h(r,n)/(2*r+1)^n)",
        "h(N,2*n) - h(N,n)/(2*N+1)^n",
        "difference of the two diagonal h forms"),
    // ------------------------------------------------------------------
    // geometric weights
    entry!("F.BNILS61", F, [N, ORD_N, Z],
        "sum(r=1..N, z^r*H(r,n))",
        "sum(r=1..N, z^r/r^n)/(1-z) - z^(N+1)/(1-z)*H(N,n)",
        "finite generating function of H_{r,n}"),
    entry!("F.P5U5ZED", F, [N, ORD_N, Z],
        "sum(r=1..N, z^(2*r-1)*h(r,n))",
        "sum(r=1..N, z^(2*r-1)/(2*r-1)^n)/(1-z^2) - z^(2*N+1)/(1-z^2)*h(N,n)",
        "finite generating function of h_{r,n}"),
    // ------------------------------------------------------------------
    // cubic identities
    entry!("F.HHPOW", F, [N, PAIR_M, PAIR_N],
        "2*sum(r=1..N, H(r,n)*H(r,m)/r^n) + sum(r=1..N, H(r,2*n)/r^m) + sum(r=1..N, H(r,n)^2/r^m)",
        "2*sum(r=1..N, H(r,n)/r^(m+n)) + H(N,m)*H(N,2*n) + H(N,m)*H(N,n)^2",
        "H_{r,n} H_{r,m} weighted by 1/r^n"),
    entry!("F.UBTCDEJ", F, [N, ORD_N],
        "3*sum(r=1..N, H(r,n)^2/r^n) - 3*sum(r=1..N, H(r,n)/r^(2*n))",
        "H(N,n)^3 - H(N,3*n)",
        "cubic H identity"),
    entry!("F.BO6QZ7A", F, [N, ORD_N],
        "3*sum(r=1..N, H(r,n)^2/r^n) + 3*sum(r=1..N, H(r,2*n)/r^n)",
        "H(N,n)^3 + 3*H(N,2*n)*H(N,n) + 2*H(N,3*n)",
        "cubic H identity, second form"),
    entry!("F.MIMII8D", F, [N, ORD_N],
        "3*sum(r=1..N, H(r,n)^2/(r+1)^n) + 3*sum(r=1..N, H(r,n)/r^(2*n))",
        "H(N+1,n)^3 + 2*H(N,3*n) + 2/(N+1)^(3*n) - 3*H(N+1,n)/(N+1)^(2*n)",
        "cubic H identity with shifted weight"),
    entry!("F.H42RPES", F, [N, ORD_N],
        "3*sum(r=1..N, H(r,n)^2/(r+1)^n) + 3*sum(r=1..N, H(r,n)^2/r^n)",
        "H(N+1,n)^3 + H(N,n)^3 + H(N,3*n) + 2/(N+1)^(3*n) - 3*H(N+1,n)/(N+1)^(2*n)",
        "sum of the plain and shifted cubic forms"),
    entry!("F.SHSHPOW", F, [N, PAIR_M, PAIR_N],
        "2*sum(r=1..N, h(r,n)*h(r,m)/(2*r-1)^n) + sum(r=1..N, h(r,2*n)/(2*r-1)^m) + sum(r=1..N, h(r,n)^2/(2*r-1)^m)",
        "2*sum(r=1..N, h(r,n)/(2*r-1)^(m+n)) + h(N,m)*h(N,2*n) + h(N,m)*h(N,n)^2",
        "h_{r,n} h_{r,m} weighted by 1/(2r-1)^n"),
    entry!("F.MR00DWG", F, [N, ORD_N],
        "3*sum(r=1..N, h(r,n)^2/(2*r-1)^n) - 3*sum(r=1..N, h(r,n)/(2*r-1)^(2*n))",
        "h(N,n)^3 - h(N,3*n)",
        "cubic h identity"),
    entry!("F.JKFA132", F, [N, ORD_N],
        "3*sum(r=1..N, h(r,n)^2/(2*r-1)^n) + 3*sum(r=1..N, h(r,2*n)/(2*r-1)^n)",
        "h(N,n)^3 + 3*h(N,2*n)*h(N,n) + 2*h(N,3*n)",
        "cubic h identity, second form"),
    // ------------------------------------------------------------------
    // alternating finite sums
    entry!("F.OL6X7B4", F, [N, ORD_N],
        "Hbar(N,n)",
        "sum(s=1..N, (-1)^(s-1)/s^n)",
        "alternating harmonic number"),
    entry!("F.OL6X7B4H", F, [N, ORD_N],
        "hbar(N,n)",
        "sum(s=1..N, (-1)^(s-1)/(2*s-1)^n)",
        "alternating odd harmonic number"),
    entry!("F.HBARSPLIT", F, [N, ORD_N],
        "Hbar(N,n)",
        "-H((N-parity(N))/2,n)/2^n + h((N+parity(N))/2,n)",
        "alternating harmonic number by parity"),
    entry!("F.TO49YT7", F, [N, ORD_N],
        "Hbar(2*N,n)",
        "-H(N,n)/2^n + h(N,n)",
        "alternating harmonic number at 2N"),
    entry!("F.LDFID07", F, [N, ORD_N],
        "Hbar(2*N-1,n)",
        "-H(N-1,n)/2^n + h(N,n)",
        "alternating harmonic number at 2N-1"),
    entry!("F.GFRTFED", F, [N, ORD_N],
        "2*sum(r=1..N, 1/(4*r-1)^n)",
        "h(2*N,n) - hbar(2*N,n)",
        "denominators 3 mod 4"),
    entry!("F.NHGFTFJ", F, [N, ORD_N],
        "2*sum(r=1..N, 1/(4*r-3)^n)",
        "h(2*N,n) + hbar(2*N,n)",
        "denominators 1 mod 4"),
    entry!("F.ALTHSPLIT", F, [N, ORD_N],
        "sum(r=1..N, (-1)^(r-1)*H(r,n))",
        "-H((N-parity(N))/2,n)/2^n + parity(N)*H(N,n)",
        "alternating sum of H_{r,n}"),
    entry!("F.H87QNMG", F, [N, ORD_N],
        "sum(r=1..2*N, (-1)^(r-1)*H(r,n))",
        "-H(N,n)/2^n",
        "alternating sum of H_{r,n} to 2N"),
    entry!("F.BX3KGP2", F, [N, ORD_N],
        "sum(r=1..2*N-1, (-1)^(r-1)*H(r,n))",
        "h(N,n)",
        "alternating sum of H_{r,n} to 2N-1"),
    entry!("F.ALTSHSPLIT", F, [N, ORD_N],
        "sum(r=1..N, (-1)^(r-1)*h(r,n))",
        "-sum(r=1..(N-parity(N))/2, 1/(4*r-1)^n) + parity(N)*h(N,n)",
        "alternating sum of h_{r,n}"),
    entry!("F.N7GKLXG", F, [N, ORD_N],
        "2*sum(r=1..2*N, (-1)^(r-1)*h(r,n))",
        "hbar(2*N,n) - h(2*N,n)",
        "alternating sum of h_{r,n} to 2N"),
    entry!("F.IDBEOLY", F, [N, ORD_N],
        "2*sum(r=1..2*N-1, (-1)^(r-1)*h(r,n))",
        "hbar(2*N,n) + h(2*N,n)",
        "alternating sum of h_{r,n} to 2N-1"),
    entry!("F.KV6SA2T", F, [N, ORD_N],
        "sum(r=1..2*N, (-1)^(r-1)*Hbar(r,n))",
        "H(N,n)/2^n",
        "alternating sum of alternating harmonic numbers to 2N"),
    entry!("F.UM6WH8Z", F, [N, ORD_N],
        "sum(r=1..2*N-1, (-1)^(r-1)*Hbar(r,n))",
        "h(N,n)",
        "alternating sum of alternating harmonic numbers to 2N-1"),
    entry!("F.AN6O3QX", F, [N, PAIR_M, PAIR_N],
        "-sum(r=1..(N-parity(N))/2, H(r,n)/r^m)/2^(m+n) + sum(r=1..(N+parity(N))/2, h(r,n)/(2*r-1)^m) + sum(r=1..N, (-1)^(r-1)*H(r,n)*H(r,m))",
        "sum(r=1..N, (-1)^(r-1)*H(r,n)/r^m) + H(N,m)*sum(r=1..N, (-1)^(r-1)*H(r,n))",
        "alternating H_{r,n} H_{r,m}"),
    entry!("F.AN6SYM", F, [N, PAIR_M, PAIR_N],
        "-(H((N-parity(N))/2,n+m) + H((N-parity(N))/2,n)*H((N-parity(N))/2,m))/2^(m+n) + h((N+parity(N))/2,n+m) + h((N+parity(N))/2,n)*h((N+parity(N))/2,m) + 2*sum(r=1..N, (-1)^(r-1)*H(r,n)*H(r,m))",
        "sum(r=1..N, (-1)^(r-1)*(H(r,n)/r^m + H(r,m)/r^n)) + H(N,m)*sum(r=1..N, (-1)^(r-1)*H(r,n)) + H(N,n)*sum(r=1..N, (-1)^(r-1)*H(r,m))",
        "symmetrized alternating H_{r,n} H_{r,m}"),
    entry!("F.N8TKVQW", F, [N, PAIR_M, PAIR_N],
        "sum(r=1..2*N, (-1)^(r-1)*(2*H(r,n)*H(r,m) - H(r,n)/r^m - H(r,m)/r^n))",
        "(H(N,m+n) + H(N,m)*H(N,n))/2^(m+n) - h(N,m+n) - h(N,m)*h(N,n) - H(2*N,m)*H(N,n)/2^n - H(2*N,n)*H(N,m)/2^m",
        "alternating quadratic H form to 2N"),
    entry!("F.AV4L176", F, [N, PAIR_M, PAIR_N],
        "sum(r=1..2*N-1, (-1)^(r-1)*(2*H(r,n)*H(r,m) - H(r,n)/r^m - H(r,m)/r^n))",
        "(H(N-1,m+n) + H(N-1,m)*H(N-1,n))/2^(m+n) - h(N,m+n) - h(N,m)*h(N,n) + H(2*N-1,m)*h(N,n) + H(2*N-1,n)*h(N,m)",
        "alternating quadratic H form to 2N-1"),
    entry!("F.RHALTEVEN", F, [N, ORD_N],
        "2*sum(r=1..2*N, (-1)^(r-1)*r*H(r,n))",
        "2*h(N,n-1) - h(N,n) - 2*N*H(2*N,n) - H(2*N,n-1)",
        "alternating r H_{r,n} to 2N"),
    entry!("F.RHALTODD", F, [N, ORD_N],
        "2*sum(r=1..2*N-1, (-1)^(r-1)*r*H(r,n))",
        "2*h(N,n-1) - h(N,n) + 2*N*H(2*N-1,n) - H(2*N-1,n-1)",
        "alternating r H_{r,n} to 2N-1"),
    entry!("F.MK2D5HZ", F, [N, ORD_N],
        "sum(r=1..2*N, (-1)^(r-1)*(2*H(r,n)^2 - 2*H(r,n)/r^n))",
        "H(N,2*n)/2^(2*n) - h(N,2*n) - H(2*N,n)^2",
        "alternating H_{r,n} H_{r-1,n} to 2N"),
    entry!("F.GN5OX3Z", F, [N, ORD_N],
        "sum(r=1..2*N-1, (-1)^(r-1)*(2*H(r,n)^2 - 2*H(r,n)/r^n))",
        "H(N-1,2*n)/2^(2*n) - h(N,2*n) + H(2*N-1,n)^2",
        "alternating H_{r,n} H_{r-1,n} to 2N-1"),
    entry!("F.GPQD08Z", F, [N, ORD_N],
        "2*sum(r=1..2*N, (-1)^(r-1)*(h(r,n)^2 - h(r,n)/(2*r-1)^n))",
        "-h(2*N,n)^2 - hbar(2*N,2*n)",
        "alternating h_{r,n} h_{r-1,n} to 2N"),
    entry!("F.V1B4OYO", F, [N, ORD_N],
        "2*sum(r=1..2*N-1, (-1)^(r-1)*(h(r,n)^2 - h(r,n)/(2*r-1)^n))",
        "h(2*N-1,n)^2 - hbar(2*N-1,2*n)",
        "alternating h_{r,n} h_{r-1,n} to 2N-1"),
    // ------------------------------------------------------------------
    // polygamma forms of finite sums and the polygamma relations used
    entry!("I.GFRTFEDPSI", I, [("N", ParamSpec::Int(1, 20)), CONV_N],
        "2*sum(r=1..N, 1/(4*r-1)^n)",
        "2*(-1)^(n-1)/(4^n*fact(n-1))*(psi(n-1,3/4,N) - psi(n-1,3/4,0))",
        "denominators 3 mod 4 via polygamma"),
    entry!("I.NHGFTFJPSI", I, [("N", ParamSpec::Int(1, 20)), CONV_N],
        "2*sum(r=1..N, 1/(4*r-3)^n)",
        "2*(-1)^(n-1)/(4^n*fact(n-1))*(psi(n-1,1/4,N) - psi(n-1,1/4,0))",
        "denominators 1 mod 4 via polygamma"),
    entry!("I.M2DZB1G", I, [("m", ParamSpec::Int(1, 5)), ("x", ParamSpec::Rats(&["1/4", "1/2", "3/4", "1", "5/4", "2"]))],
        "psi(m,x,1)",
        "psi(m,x,0) + (-1)^m*fact(m)/x^(m+1)",
        "polygamma recurrence"),
    entry!("I.YBH1WCB", I, [("m", ParamSpec::Int(1, 5)), ("z", ParamSpec::Int(1, 12))],
        "psi(m,1,z-1)/((-1)^(m+1)*fact(m))",
        "zeta(m+1) - H(z-1,m+1)",
        "polygamma at integers"),
    // ------------------------------------------------------------------
    // infinite sums: cubic limits and quadratic results
    entry!("I.JX9A49P", I, [CONV_N],
        "3*sum(r=1..inf, H(r,n)^2/r^n) - 3*sum(r=1..inf, H(r,n)/r^(2*n))",
        "zeta(n)^3 - zeta(3*n)",
        "limit of the cubic H identity"),
    entry!("I.CUBICPLUS", I, [CONV_N],
        "3*sum(r=1..inf, H(r,n)^2/r^n) + 3*sum(r=1..inf, H(r,2*n)/r^n)",
        "zeta(n)^3 + 3*zeta(n)*zeta(2*n) + 2*zeta(3*n)",
        "limit of the second cubic H form"),
    entry!("I.B7Z8VY9", I, [CONV_N],
        "3*sum(r=1..inf, H(r,n)^2/r^n) + 3*sum(r=1..inf, H(r,n)^2/(r+1)^n)",
        "2*zeta(n)^3 + zeta(3*n)",
        "limit of the plain plus shifted cubic forms"),
    entry!("I.HTUJPPT", I, [],
        "sum(r=1..inf, H(r,2)^2/r^2)",
        "19*pi^6/22680 + zeta(3)^2",
        "quadratic H_{r,2} sum"),
    entry!("I.XX2CQV4", I, [],
        "sum(r=1..inf, H(r,2)^2/(r+1)^2)",
        "59*pi^6/22680 - zeta(3)^2",
        "shifted quadratic H_{r,2} sum"),
    entry!("I.RR1H2RED", I, [],
        "sum(r=1..inf, H(r,2)^2/(r*(r+1)))",
        "2*sum(r=1..inf, H(r,2)/r^3) - zeta(5)",
        "telescoped H_{r,2}^2/(r(r+1))"),
    entry!("I.RR1H3RED", I, [],
        "sum(r=1..inf, H(r,3)^2/(r*(r+1)))",
        "2*sum(r=1..inf, H(r,3)/r^4) - zeta(7)",
        "telescoped H_{r,3}^2/(r(r+1))"),
    entry!("I.RR1H2", I, [],
        "sum(r=1..inf, H(r,2)^2/(r*(r+1)))",
        "pi^2*zeta(3) - 10*zeta(5)",
        "H_{r,2}^2/(r(r+1))"),
    entry!("I.RR1H3", I, [],
        "sum(r=1..inf, H(r,3)^2/(r*(r+1)))",
        "35*zeta(7) - 10*pi^2/3*zeta(5)",
        "H_{r,3}^2/(r(r+1))"),
    entry!("I.WC5IDTU", I, [CONV_N],
        "3*sum(r=1..inf, h(r,n)^2/(2*r-1)^n) - 3*sum(r=1..inf, h(r,n)/(2*r-1)^(2*n))",
        "(1-2^(-n))^3*zeta(n)^3 - (1-2^(-3*n))*zeta(3*n)",
        "limit of the cubic h identity"),
    entry!("I.A710HII", I, [CONV_N],
        "3*sum(r=1..inf, h(r,n)^2/(2*r-1)^n) + 3*sum(r=1..inf, h(r,2*n)/(2*r-1)^n)",
        "(1-2^(-n))^3*zeta(n)^3 + 3*(1-2^(-n))*(1-2^(-2*n))*zeta(n)*zeta(2*n) + 2*(1-2^(-3*n))*zeta(3*n)",
        "limit of the second cubic h form"),
    // nested double sums
    entry!("I.KJ6CAN4", I, [CONV_M, ("n", ParamSpec::Int(1, 4))],
        "2*sum(r=1..inf, sum(s=1..r, H(s,n)/s^n)/r^m)",
        "sum(r=1..inf, H(r,2*n)/r^m) + sum(r=1..inf, H(r,n)^2/r^m)",
        "nested sum of H_{s,n}/s^n",
        &[("m", &[2, 3]), ("n", &[1, 2])]),
    entry!("I.TZ92KXC", I, [],
        "2*sum(r=1..inf, sum(s=1..r, H(s,1)/s)/r^2)",
        "sum(r=1..inf, H(r,2)/r^2) + sum(r=1..inf, H(r,1)^2/r^2)",
        "nested sum of H_s/s"),
    entry!("I.UYJ3SSJ", I, [],
        "2*sum(r=1..inf, sum(s=1..r, H(s,2)/s^2)/r^2)",
        "sum(r=1..inf, H(r,4)/r^2) + sum(r=1..inf, H(r,2)^2/r^2)",
        "nested sum of H_{s,2}/s^2"),
    entry!("I.RHGE266", I, [],
        "sum(r=1..inf, sum(s=1..r, H(s,1)/s)/r^2)",
        "pi^4/30",
        "nested sum of H_s/s, closed form"),
    entry!("I.E6PZKE8", I, [],
        "sum(r=1..inf, sum(s=1..r, H(s,2)/s^2)/r^2)",
        "31*pi^6/15120",
        "nested sum of H_{s,2}/s^2, closed form"),
    // linear sums and h analogues
    entry!("I.CFH5L7G", I, [("m", ParamSpec::Int(2, 5)), ("n", ParamSpec::Int(2, 5))],
        "sum(r=1..inf, H(r,n)/r^m) + sum(r=1..inf, H(r,m)/r^n)",
        "zeta(m+n) + zeta(m)*zeta(n)",
        "symmetric linear H sum",
        MN23),
    entry!("I.CFHPSI", I, [("m", ParamSpec::Int(2, 4)), ("n", ParamSpec::Int(2, 4))],
        "(-1)^n/fact(n-1)*sum(r=1..inf, psi(n-1,1,r-1)/r^m) + (-1)^m/fact(m-1)*sum(r=1..inf, psi(m-1,1,r-1)/r^n)",
        "zeta(m+n) + zeta(m)*zeta(n)",
        "symmetric linear sum via polygamma",
        MN23),
    entry!("I.KHVARP3", I, [CONV_N],
        "2*sum(r=1..inf, H(r,n)/r^n)",
        "zeta(2*n) + zeta(n)^2",
        "diagonal linear H sum"),
    entry!("I.OQ0WQLS", I, [("m", ParamSpec::Int(2, 5)), ("n", ParamSpec::Int(2, 5))],
        "sum(r=1..inf, h(r,n)/(2*r-1)^m) + sum(r=1..inf, h(r,m)/(2*r-1)^n)",
        "(1-2^(-m-n))*zeta(m+n) + (1-2^(-m))*(1-2^(-n))*zeta(m)*zeta(n)",
        "symmetric linear h sum",
        MN23),
    entry!("I.OQDIAG", I, [CONV_N],
        "2*sum(r=1..inf, h(r,n)/(2*r-1)^n)",
        "(1-2^(-2*n))*zeta(2*n) + (1-2^(-n))^2*zeta(n)^2",
        "diagonal linear h sum"),
    entry!("I.OQPLUS", I, [("m", ParamSpec::Int(2, 5)), ("n", ParamSpec::Int(2, 5))],
        "sum(r=1..inf, h(r,n)/(2*r+1)^m) + sum(r=1..inf, h(r,m)/(2*r+1)^n)",
        "zeta(m)*zeta(n)*(1-2^(-m))*(1-2^(-n)) - zeta(m+n)*(1-2^(-m-n))",
        "symmetric linear h sum, shifted weight",
        MN23),
    entry!("I.AB0L0C2", I, [("m", ParamSpec::Int(2, 5)), ("n", ParamSpec::Int(2, 5))],
        "sum(r=1..inf, h(r,n)/(2*r+1)^m) + sum(r=1..inf, h(r,m)/(2*r-1)^n)",
        "zeta(m)*zeta(n)*(1-2^(-m))*(1-2^(-n))",
        "one-sided shifted linear h sum",
        MN23),
    entry!("I.OQPLUSDIAG", I, [CONV_N],
        "2*sum(r=1..inf, h(r,n)/(2*r+1)^n)",
        "zeta(n)^2*(1-2^(-n))^2 - zeta(2*n)*(1-2^(-2*n))",
        "diagonal linear h sum, shifted weight"),
    entry!("I.OQMIXDIAG", I, [CONV_N],
        "sum(r=1..inf, h(r,n)/(2*r+1)^n) + sum(r=1..inf, h(r,n)/(2*r-1)^n)",
        "zeta(n)^2*(1-2^(-n))^2",
        "sum of both diagonal linear h sums"),
    entry!("I.L1DNZJG", I, [],
        "sum(r=1..inf, h(r,3)/(2*r-1)^2)",
        "pi^2/16*zeta(3) + 31/64*zeta(5)",
        "h_{r,3}/(2r-1)^2"),
    entry!("I.E9Z9VTC", I, [],
        "sum(r=1..inf, h(r,2)/(2*r-1)^3)",
        "3*pi^2/64*zeta(3) + 31/64*zeta(5)",
        "h_{r,2}/(2r-1)^3"),
    entry!("I.H3PLUS", I, [],
        "sum(r=1..inf, h(r,3)/(2*r+1)^2)",
        "pi^2/16*zeta(3) - 31/64*zeta(5)",
        "h_{r,3}/(2r+1)^2"),
    entry!("I.H2PLUS", I, [],
        "sum(r=1..inf, h(r,2)/(2*r+1)^3)",
        "3*pi^2/64*zeta(3) - 31/64*zeta(5)",
        "h_{r,2}/(2r+1)^3"),
    entry!("I.CATALANRED", I, [],
        "2*sum(r=1..inf, h(r,2)^2/(4*r^2-1))",
        "2*sum(r=1..inf, h(r,2)/(2*r-1)^3) - (1-2^(-5))*zeta(5)",
        "telescoped h_{r,2}^2/(4r^2-1)"),
    entry!("I.CATALAN32", I, [],
        "sum(r=1..inf, h(r,2)^2/(4*r^2-1))",
        "3*pi^2/64*zeta(3)",
        "h_{r,2}^2/(4r^2-1)"),
    entry!("I.FOMFJOE", I, [("m", ParamSpec::Int(2, 5)), ("n", ParamSpec::Int(2, 5))],
        "sum(r=1..inf, h(r,m)/r^n) + sum(r=1..inf, H(r-1,n)/(2*r-1)^m)",
        "(1-2^(-m))*zeta(m)*zeta(n)",
        "mixed h and H limit",
        MN23),
    entry!("I.FOMFJOEDIAG", I, [CONV_N],
        "sum(r=1..inf, h(r,n)/r^n) + sum(r=1..inf, H(r-1,n)/(2*r-1)^n)",
        "(1-2^(-n))*zeta(n)^2",
        "mixed h and H limit, equal orders"),
    // ------------------------------------------------------------------
    // power series
    entry!("P.BZKCRL5", P, [("n", ParamSpec::Int(1, 5)), Z],
        "sum(r=1..inf, z^r*H(r,n))",
        "Li(n,z)/(1-z)",
        "generating function of H_{r,n}"),
    entry!("P.BZKN1", P, [Z],
        "sum(r=1..inf, z^r*H(r,1))",
        "-log(1-z)/(1-z)",
        "generating function of H_r"),
    entry!("P.H2HALF", P, [],
        "sum(r=1..inf, H(r,2)/2^r)",
        "pi^2/6 - log2^2",
        "H_{r,2}/2^r"),
    entry!("P.H3HALF", P, [],
        "sum(r=1..inf, H(r,3)/2^r)",
        "7/4*zeta(3) - pi^2*log2/6 + log2^3/3",
        "H_{r,3}/2^r; the log2 term carries a single power of log2"),
    entry!("P.PSIWEIGHT", P, [("n", ParamSpec::Int(2, 5)), Z],
        "sum(r=1..inf, z^r*psi(n-1,1,r-1))",
        "(-1)^(n-1)*fact(n-1)*z/(1-z)*(Li(n,z) - zeta(n))",
        "polygamma-weighted generating function"),
    entry!("P.P5U5ZEDLIM", P, [("n", ParamSpec::Int(1, 5)), Z],
        "2*sum(r=1..inf, z^(2*r-1)*h(r,n))",
        "(Li(n,z) - Li(n,-z))/(1-z^2)",
        "generating function of h_{r,n}"),
    entry!("P.LOGRATIO", P, [Z],
        "2*sum(r=1..inf, z^(2*r-1)*h(r,1))",
        "log((1+z)/(1-z))/(1-z^2)",
        "generating function of h_r"),
    entry!("P.O6MNEA9", P,
        [("x", ParamSpec::Rats(&["1/2", "2/3"])), ("y", ParamSpec::Rats(&["1/3", "3/4"])),
         ("p", ParamSpec::Int(1, 2)), ("q", ParamSpec::Int(1, 2)), ("m", ParamSpec::Int(1, 3)), ("n", ParamSpec::Int(1, 3))],
        "sum(r=1..inf, x^(p*r)/r^m*sum(s=1..r, y^(q*s)/s^n)) + sum(r=1..inf, y^(q*r)/r^n*sum(s=1..r, x^(p*s)/s^m))",
        "Li(m+n,x^p*y^q) + Li(m,x^p)*Li(n,y^q)",
        "double generating function",
        &[("p", &[1]), ("m", &[1, 2]), ("n", &[2, 3])]),
    // ------------------------------------------------------------------
    // alternating series
    entry!("A.E2SKUNM1", A, [],
        "sum(r=1..inf, (-1)^(r-1)/r)",
        "log2",
        "limit of the alternating harmonic number"),
    entry!("A.E2SKUNM", A, [CONV_N],
        "sum(r=1..inf, (-1)^(r-1)/r^n)",
        "(1-2^(1-n))*zeta(n)",
        "limit of the alternating harmonic number of order n"),
    entry!("A.LOG2", A, [],
        "2*sum(r=1..inf, (-1)^(r-1)*H(r,1))",
        "log2",
        "alternating sum of H_r"),
    entry!("A.BHDGDGS", A, [CONV_N],
        "2*sum(r=1..inf, (-1)^(r-1)*H(r,n))",
        "(1-2^(1-n))*zeta(n)",
        "alternating sum of H_{r,n}"),
    entry!("A.H2PI12", A, [],
        "2*sum(r=1..inf, (-1)^(r-1)*H(r,2))",
        "pi^2/12",
        "alternating sum of H_{r,2}"),
    entry!("A.D6AJLZI", A, [CONV_N],
        "2*sum(r=1..inf, (-1)^(r-1)*h(r,n))",
        "sum(r=1..inf, 1/(4*r-3)^n) - sum(r=1..inf, 1/(4*r-1)^n)",
        "alternating sum of h_{r,n}"),
    entry!("A.D6AJLZIPSI", A, [CONV_N],
        "2*sum(r=1..inf, (-1)^(r-1)*h(r,n))",
        "(-1)^n/(4^n*fact(n-1))*(psi(n-1,1/4,0) - psi(n-1,3/4,0))",
        "alternating sum of h_{r,n} via polygamma"),
    entry!("A.BETA2N", A, [("n", ParamSpec::Int(1, 3))],
        "2*sum(r=1..inf, (-1)^(r-1)*h(r,2*n))",
        "beta(2*n)",
        "alternating sum of h_{r,2n}"),
    entry!("A.EULERODD", A, [("n", ParamSpec::Int(1, 3))],
        "2*sum(r=1..inf, (-1)^(r-1)*h(r,2*n-1))",
        "abs(E(2*n-2))*pi^(2*n-1)/(2^(2*n)*fact(2*n-2))",
        "alternating sum of h_{r,2n-1}"),
    entry!("A.PI4", A, [],
        "2*sum(r=1..inf, (-1)^(r-1)*h(r,1))",
        "pi/4",
        "alternating sum of h_r"),
    entry!("A.CATALAN", A, [],
        "2*sum(r=1..inf, (-1)^(r-1)*h(r,2))",
        "catalan",
        "alternating sum of h_{r,2}"),
    entry!("A.PI332", A, [],
        "2*sum(r=1..inf, (-1)^(r-1)*h(r,3))",
        "pi^3/32",
        "alternating sum of h_{r,3}"),
    entry!("A.CGZC8JH", A, [("m", ParamSpec::Int(2, 4)), ("n", ParamSpec::Int(2, 4))],
        "sum(r=1..inf, (-1)^(r-1)*(2*H(r,n)*H(r,m) - H(r,n)/r^m - H(r,m)/r^n))",
        "-(1-2^(1-m-n))*zeta(m+n)",
        "alternating quadratic H form",
        MN23),
    entry!("A.CGZDIAG", A, [("n", ParamSpec::Int(1, 4))],
        "2*sum(r=1..inf, (-1)^(r-1)*(H(r,n)^2 - H(r,n)/r^n))",
        "-(1-2^(1-2*n))*zeta(2*n)",
        "alternating quadratic H form, equal orders"),
    entry!("A.HHPREV", A, [("n", ParamSpec::Int(1, 4))],
        "2*sum(r=1..inf, (-1)^(r-1)*H(r,n)*H(r-1,n))",
        "-(1-2^(1-2*n))*zeta(2*n)",
        "alternating H_{r,n} H_{r-1,n}"),
    entry!("A.XBJEJU6", A, [("n", ParamSpec::Int(1, 4))],
        "2*sum(r=1..inf, (-1)^(r-1)*H(r,n)*H(r-1,n))",
        "-(2^(2*n-1)-1)/fact(2*n)*abs(B(2*n))*pi^(2*n)",
        "alternating H_{r,n} H_{r-1,n} via Bernoulli numbers"),
    entry!("A.DG360QB", A, [],
        "2*sum(r=1..inf, (-1)^(r-1)*H(r,1)*H(r-1,1))",
        "-pi^2/12",
        "alternating H_r H_{r-1}"),
    entry!("A.DG360QBB", A, [],
        "2*sum(r=1..inf, (-1)^(r-1)*H(r,1)^2) - 2*sum(r=1..inf, (-1)^(r-1)*H(r,1)/r)",
        "-pi^2/12",
        "alternating H_r^2 minus H_r/r"),
    entry!("A.H1SQ", A, [],
        "2*sum(r=1..inf, (-1)^(r-1)*H(r,1)^2)",
        "pi^2/12 - log2^2",
        "alternating sum of H_r^2"),
    entry!("A.RH2", A, [],
        "2*sum(r=1..inf, (-1)^(r-1)*r*H(r,2))",
        "log2 - pi^2/24",
        "alternating sum of r H_{r,2}"),
    entry!("A.RHN", A, [("n", ParamSpec::Int(3, 6))],
        "2*sum(r=1..inf, (-1)^(r-1)*r*H(r,n))",
        "(1-2^(2-n))*zeta(n-1) - (1-2^(1-n))*zeta(n)/2",
        "alternating sum of r H_{r,n}"),
    entry!("A.SHSHPREV", A, [("n", ParamSpec::Int(1, 3))],
        "2*sum(r=1..inf, (-1)^(r-1)*h(r,n)*h(r-1,n))",
        "-beta(2*n)",
        "alternating h_{r,n} h_{r-1,n}"),
    entry!("A.SHSHPSI", A, [("n", ParamSpec::Int(1, 3))],
        "2*sum(r=1..inf, (-1)^(r-1)*h(r,n)*h(r-1,n))",
        "(psi(2*n-1,3/4,0) - psi(2*n-1,1/4,0))/(4^(2*n)*fact(2*n-1))",
        "alternating h_{r,n} h_{r-1,n} via polygamma"),
    entry!("A.PQ6LUCU", A, [],
        "2*sum(r=1..inf, (-1)^(r-1)*h(r,1)*h(r-1,1))",
        "-catalan",
        "alternating h_r h_{r-1}"),
    entry!("A.SH1SQ", A, [],
        "2*sum(r=1..inf, (-1)^(r-1)*h(r,1)^2)",
        "pi*log2/4",
        "alternating sum of h_r^2"),
    // ------------------------------------------------------------------
    // literature values
    entry!("R.COFFEY", R, [],
        "sum(r=1..inf, H(r,2)/r^4)",
        "zeta(3)^2 - pi^6/2835",
        "linear sum H_{r,2}/r^4"),
    entry!("R.ZHENG33B", R, [],
        "2*sum(r=1..inf, H(r,2)/r^3)",
        "pi^2*zeta(3) - 9*zeta(5)",
        "linear sum H_{r,2}/r^3"),
    entry!("R.ZHENG35D", R, [],
        "sum(r=1..inf, H(r,4)/r^3)",
        "pi^4/90*zeta(3) + 5*pi^2/3*zeta(5) - 17*zeta(7)",
        "linear sum H_{r,4}/r^3, sign of the zeta(5) term corrected"),
    entry!("R.BORWEIN", R, [],
        "sum(r=1..inf, H(r,1)^2/r^2)",
        "17*pi^4/360",
        "quadratic sum H_r^2/r^2"),
    entry!("R.MW42", R, [],
        "sum(r=1..inf, H(r,4)/r^2)",
        "37*pi^6/11340 - zeta(3)^2",
        "linear sum H_{r,4}/r^2"),
    entry!("R.CHU42C", R, [],
        "2*sum(r=1..inf, (-1)^(r-1)*H(r,1)/r)",
        "pi^2/6 - log2^2",
        "alternating H_r/r"),
    entry!("R.CHU45C", R, [],
        "2*sum(r=1..inf, (-1)^(r-1)*h(r,1)/(2*r-1))",
        "pi*log2/4 + catalan",
        "alternating h_r/(2r-1)"),
];

/// Tags that are general statements over arbitrary summands rather than
/// catalog identities; the oracle crate checks them on random summands.
pub(crate) const OUT_OF_SCOPE: &[(&str, &str)] = &[
    ("UMDYPAB", "double-sum identity for an arbitrary summand; randomized exact checks in the oracle"),
    ("J7BAV13", "symmetric-summand corollary; randomized exact checks in the oracle"),
    ("DX732BJ", "factorable-summand corollary; randomized exact checks in the oracle"),
    ("LN46YPV", "squared factorable corollary; randomized exact checks in the oracle"),
    ("IP14A9I", "single-index corollary; randomized exact checks in the oracle"),
];
