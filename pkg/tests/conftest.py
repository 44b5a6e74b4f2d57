import pytest

from supersingular import cyclotomic, fields, oracle_ec, weil, arith

_results = []


def pytest_configure(config):
    config.addinivalue_line('markers', 'criterion(number, title, limit): acceptance criterion')


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker('criterion')
    if marker is None:
        return
    if report.when == 'call' or (report.when == 'setup' and not report.passed):
        number, title, limit = marker.args
        _results.append((number, title, limit, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section('acceptance criteria')
    for number, title, limit, outcome, duration in sorted(_results):
        verdict = 'PASS' if outcome == 'passed' else 'FAIL'
        terminalreporter.write_line(
            f'criterion {number}: {verdict}  {duration:7.2f} s (limit {limit} s)  {title}')


def clear_caches():
    """Drop every memo so timings measure cold runs."""
    weil._embed_cache.clear()
    weil._minpoly_cache.clear()
    cyclotomic.sqrt_p_embed.cache_clear()
    arith.cyclotomic_poly.cache_clear()
    arith._factorize.cache_clear()
    cyclotomic._phi_tail.cache_clear()
    fields.get_field.cache_clear()
    oracle_ec._solutions_table.cache_clear()


@pytest.fixture
def cold():
    clear_caches()
    yield
