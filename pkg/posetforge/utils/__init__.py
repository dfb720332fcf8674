import numpy as np
from joblib import Parallel, delayed

__all__ = ['inherit_docstring_from', 'parallel_map', 'random_permutation',
           'seed_random_state']


def inherit_docstring_from(cls):
    """Decorator for class methods to inherit docstring from :code:`cls`
    """
    def docstring_inheriting_decorator(fn):
        fn.__doc__ = getattr(cls, fn.__name__).__doc__
        return fn
    return docstring_inheriting_decorator


def seed_random_state(seed):
    """Turn seed into np.random.RandomState instance
    """
    if (seed is None) or (isinstance(seed, int)):
        return np.random.RandomState(seed)
    elif isinstance(seed, np.random.RandomState):
        return seed
    raise ValueError("%r can not be used to generate numpy.random.RandomState"
                     " instance" % seed)


def random_permutation(n, random_state=None):
    """Uniform random permutation of range(n) as a list."""
    return seed_random_state(random_state).permutation(n).tolist()


def parallel_map(fn, items, n_jobs=1):
    """Apply fn to every item, in order, with joblib workers if n_jobs != 1.

    The result list is in input order whatever the worker count.
    """
    items = list(items)
    if n_jobs == 1:
        return [fn(item) for item in items]
    return Parallel(n_jobs=n_jobs, backend='threading')(
        delayed(fn)(item) for item in items)
