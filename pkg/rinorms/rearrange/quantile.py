# -*- coding: utf-8 -*-


import csv

import numpy as np


class NotARearrangementError(ValueError):
    pass


def _affine(left, right, start, stop, t):
    """ Value at ``t`` of the affine pieces, constant pieces exactly """
    with np.errstate(invalid='ignore', divide='ignore'):
        w = (t - start) / (stop - start)
        value = left + (right - left) * w

    value = np.where(left == right, left, value)
    # An infinite head stays infinite
    return np.where(np.isinf(left), np.inf, value)


class QuantileFunction(object):
    """
    Non-increasing function on :math:`[0, L]`, represented by
    breakpoints :math:`0 = t_0 < t_1 < \\cdots < t_k = L` and, on each
    :math:`[t_i, t_{i+1})`, an affine piece running from
    ``left[i]`` at :math:`t_i` to ``right[i]`` as :math:`t \\to t_{i+1}`.
    Constant pieces have ``left[i] == right[i]``.

    Evaluation is right-continuous and the function is zero beyond
    :math:`L`. Instances are immutable.

    Parameters
    ----------
    breakpoints : :class:`numpy.ndarray`
        Strictly increasing breakpoints of shape :code:`(k + 1,)`
        starting at 0.
    left : :class:`numpy.ndarray`
        Values at the left end of each piece, shape :code:`(k,)`.
    right : :class:`numpy.ndarray`, optional
        Left limits at the right end of each piece.
        Defaults to ``left``, producing a step function.

    Raises
    ------
    NotARearrangementError
        If the values increase anywhere.
    """
    __slots__ = ("breakpoints", "left", "right")

    def __init__(self, breakpoints, left, right=None):
        breakpoints = np.array(breakpoints, dtype=np.float64)
        left = np.array(left, dtype=np.float64)
        right = left.copy() if right is None else np.array(right,
                                                           dtype=np.float64)

        if breakpoints.ndim != 1 or breakpoints.shape[0] < 2:
            raise ValueError("At least two breakpoints are required")

        if breakpoints[0] != 0.0:
            raise ValueError("breakpoints must start at 0")

        if not np.all(np.diff(breakpoints) > 0):
            raise ValueError("breakpoints must be strictly increasing")

        if not left.shape == right.shape == (breakpoints.shape[0] - 1,):
            raise ValueError("left %s and right %s must have one value "
                             "per piece %d" % (left.shape, right.shape,
                                               breakpoints.shape[0] - 1))

        values = np.empty(2 * left.shape[0], dtype=np.float64)
        values[0::2] = left
        values[1::2] = right

        if np.any(np.isnan(values)) or np.any(values < 0):
            raise ValueError("values must be non-negative")

        if np.any(np.isinf(values[1:])):
            raise ValueError("Only the value at 0 may be infinite")

        if np.any(np.diff(values) > 0):
            raise NotARearrangementError("not a rearrangement")

        for a in (breakpoints, left, right):
            a.setflags(write=False)

        self.breakpoints = breakpoints
        self.left = left
        self.right = right

    @property
    def length(self):
        """ Length :math:`L` of the domain """
        return self.breakpoints[-1]

    @property
    def is_step(self):
        return bool(np.all(self.left == self.right))

    def __call__(self, t):
        t = np.asarray(t, dtype=np.float64)
        bp = self.breakpoints
        i = np.clip(np.searchsorted(bp, t, side='right') - 1,
                    0, self.left.shape[0] - 1)
        value = _affine(self.left[i], self.right[i], bp[i], bp[i + 1], t)

        return np.where(t >= self.length, 0.0, value)

    def pieces(self, a=0.0, b=None):
        """
        Pieces clipped to :math:`[a, b]`.

        Returns
        -------
        tuple
            :code:`(start, stop, start_value, stop_value)` arrays,
            where ``stop_value`` is the left limit at ``stop``.
        """
        b = self.length if b is None else min(b, self.length)
        a = max(a, 0.0)
        bp = self.breakpoints

        mask = (bp[1:] > a) & (bp[:-1] < b)
        start = np.maximum(bp[:-1][mask], a)
        stop = np.minimum(bp[1:][mask], b)
        left, right = self.left[mask], self.right[mask]
        lo, hi = bp[:-1][mask], bp[1:][mask]

        return (start, stop,
                _affine(left, right, lo, hi, start),
                _affine(left, right, lo, hi, stop))

    def integral(self, a=0.0, b=None):
        """ Exact integral over :math:`[a, b]` """
        start, stop, v0, v1 = self.pieces(a, b)
        return float(np.sum(0.5 * (v0 + v1) * (stop - start)))

    def truncate(self, length):
        """ Restriction to :math:`[0, length]`, zero padded if longer """
        if not length > 0:
            raise ValueError("length %s must be > 0" % length)

        start, stop, v0, v1 = self.pieces(0.0, length)
        breakpoints = np.append(start, stop[-1])

        if length > self.length:
            breakpoints = np.append(breakpoints, length)
            v0 = np.append(v0, 0.0)
            v1 = np.append(v1, 0.0)

        return QuantileFunction(breakpoints, v0, v1)

    def dilate(self, factor):
        """ :math:`g(t) = f(t / c)` on :math:`[0, cL]` """
        if not factor > 0:
            raise ValueError("dilation factor %s must be > 0" % factor)

        return QuantileFunction(self.breakpoints * factor,
                                self.left, self.right)

    def scale(self, factor):
        """ :math:`c f` for :math:`c \\ge 0` """
        if not factor >= 0:
            raise ValueError("scale factor %s must be >= 0" % factor)

        return QuantileFunction(self.breakpoints,
                                self.left * factor,
                                self.right * factor)

    def to_csv(self, filename):
        """ Write :code:`(t, value)` pairs at the breakpoints """
        with open(filename, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["t", "value"])

            for t, v in zip(self.breakpoints[:-1], self.left):
                writer.writerow(["%.17g" % t, "%.17g" % v])

            writer.writerow(["%.17g" % self.length,
                             "%.17g" % self.right[-1]])

    def __eq__(self, other):
        return (isinstance(other, QuantileFunction) and
                np.array_equal(self.breakpoints, other.breakpoints) and
                np.array_equal(self.left, other.left) and
                np.array_equal(self.right, other.right))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return ("QuantileFunction(length=%s, pieces=%d, step=%s)"
                % (self.length, self.left.shape[0], self.is_step))


def empirical_quantile(samples):
    """
    Non-increasing rearrangement of a sample as a step
    function on :math:`[0, 1]`: with sorted values
    :math:`v_1 \\ge \\cdots \\ge v_s`, piece :math:`i`
    holds :math:`v_i` on :math:`[(i-1)/s, i/s)`.

    Parameters
    ----------
    samples : :class:`numpy.ndarray`
        Non-negative samples of shape :code:`(s,)`

    Returns
    -------
    :class:`QuantileFunction`
    """
    samples = np.asarray(samples, dtype=np.float64).ravel()

    if samples.shape[0] == 0:
        raise ValueError("empty sample")

    values = np.sort(samples)[::-1]
    s = values.shape[0]

    return QuantileFunction(np.arange(s + 1, dtype=np.float64) / s, values)
