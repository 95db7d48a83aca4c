//! Data-parallel helpers with a sequential fallback.
//!
//! Without the `parallel` feature every helper runs sequentially and
//! [`Parallelism::Parallel`] behaves exactly like [`Parallelism::Sequential`].
//! Results never depend on the mode: maps preserve input order and reductions
//! only combine exact, associative values.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    #[default]
    Parallel,
}

impl Parallelism {
    /// Whether work will actually be spread across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Parallelism::Parallel
    }
}

/// Order-preserving map.
pub fn map<T, R, F>(items: &[T], mode: Parallelism, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// Order-preserving map over owned items.
pub fn map_owned<T, R, F>(items: Vec<T>, mode: Parallelism, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return items.into_par_iter().map(f).collect();
    }
    let _ = mode;
    items.into_iter().map(f).collect()
}

/// Tree reduction of an associative operation; `identity` for empty input.
pub fn reduce<T, Op>(
    items: Vec<T>,
    mode: Parallelism,
    identity: impl Fn() -> T + Sync + Send,
    op: Op,
) -> T
where
    T: Send,
    Op: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return items.into_par_iter().reduce(identity, op);
    }
    let _ = mode;
    items.into_iter().fold(identity(), op)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let v: Vec<u64> = (0..200).collect();
        let a = map(&v, Parallelism::Sequential, |x| x * x);
        let b = map(&v, Parallelism::Parallel, |x| x * x);
        assert_eq!(a, b);
        let s = reduce(v.clone(), Parallelism::Parallel, || 0, |x, y| x + y);
        assert_eq!(s, 199 * 200 / 2);
        assert_eq!(map_owned(v, Parallelism::Parallel, |x| x + 1)[0], 1);
    }
}
