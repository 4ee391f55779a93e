"""PIR rates as exact rationals.

Bits are counted the way the transport sends them: every F_{q^s} entry
costs s·b bits, every F_q payload symbol b bits.
"""
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RateBreakdown:
    upload_bits: int
    download_bits: int
    payload_bits: int
    asymptotic_rate: Fraction

    @property
    def exact_rate(self):
        return Fraction(self.payload_bits, self.upload_bits + self.download_bits)


def _query_bits(params):
    return params.m * params.delta * params.n * params.s * params.b


def _response_bits(params):
    return params.L * params.n * params.s * params.b


def _file_bits(params):
    return params.L * params.delta * params.b


def rate_exact(params):
    """f files from f+1 queries: fLδ log q / ((f+1)(mδn + Ln) log q^s)."""
    queries = params.f + 1
    breakdown = RateBreakdown(
        upload_bits=queries * _query_bits(params),
        download_bits=queries * _response_bits(params),
        payload_bits=params.f * _file_bits(params),
        asymptotic_rate=Fraction(params.f * params.delta, queries * params.ns),
    )
    # the f/(f+1) share of the single-file asymptote
    assert breakdown.asymptotic_rate == Fraction(params.f, queries) * original_asymptote(params)
    return breakdown


def original_asymptote(params):
    """δ/(ns), asserted equal to 1 − (k + (v/s)(n−k))/n."""
    rate = Fraction(params.delta, params.ns)
    n, k = params.n, params.k
    assert rate == 1 - (k + Fraction(params.v, params.s) * (n - k)) / n
    return rate


def rate_original(params):
    """One file from one query: Lδ log q / ((mδn + Ln) log q^s)."""
    return RateBreakdown(
        upload_bits=_query_bits(params),
        download_bits=_response_bits(params),
        payload_bits=_file_bits(params),
        asymptotic_rate=original_asymptote(params),
    )


def rate_reusing_beta(params):
    """f files from f queries once the β response is stored."""
    return RateBreakdown(
        upload_bits=params.f * _query_bits(params),
        download_bits=params.f * _response_bits(params),
        payload_bits=params.f * _file_bits(params),
        asymptotic_rate=original_asymptote(params),
    )
