import pytest

from maml.analyze import MalformedHtml, compare, report_page

MINIMAL = "<html><head></head><body></body></html>"


def test_minimal_page_golden():
    r = report_page(MINIMAL)
    assert r.element_count == 3
    assert r.max_dom_depth == 2
    assert r.bytes_css == 0
    assert r.bytes_script == 0
    assert r.bytes_html == len(MINIMAL)
    assert r.external_request_count == 0


def test_script_bytes_additive():
    page = "<html><body><script>" + "a" * 100 + "</script><script>" + "b" * 100 + "</script></body></html>"
    assert report_page(page).bytes_script == 200


def test_inline_style_counts_as_css():
    page = '<html><body><div style="color:#fff"></div><style>p{margin:0}</style></body></html>'
    r = report_page(page)
    assert r.bytes_css == len("color:#fff") + len("p{margin:0}")


def test_external_requests_distinct():
    page = (
        '<html><head>'
        '<link rel="stylesheet" href="https://cdn.example.com/a.css">'
        '<script src="https://cdn.example.com/a.js"></script>'
        '<script src="https://cdn.example.com/a.js"></script>'
        '</head><body><img src="https://cdn.example.com/a.png"></body></html>'
    )
    assert report_page(page).external_request_count == 3


def test_relative_urls_not_counted_external():
    page = '<html><body><img src="local.png"></body></html>'
    assert report_page(page).external_request_count == 0


def test_depth_tracks_nesting():
    page = "<html><body><div><div><div><p>x</p></div></div></div></body></html>"
    assert report_page(page).max_dom_depth == 6


def test_void_elements_do_not_deepen():
    page = "<html><body><img src='a.png'><br><input></body></html>"
    r = report_page(page)
    assert r.max_dom_depth == 3
    assert r.element_count == 5


def test_empty_input_is_malformed():
    with pytest.raises(MalformedHtml):
        report_page("")
    with pytest.raises(MalformedHtml):
        report_page("just some text, no tags")


def test_bytes_total_is_sum():
    page = '<html><body><style>p{}</style><script>1</script><p style="x:y">t</p></body></html>'
    r = report_page(page)
    assert r.bytes_total == r.bytes_html + r.bytes_css + r.bytes_script
    assert r.bytes_total == len(page.encode("utf-8"))


def test_compare_identical_zero_deltas():
    r = report_page(MINIMAL)
    d = compare(r, r)
    assert d.delta("bytes_total") == 0
    assert d.pct("element_count") == 0.0


def test_compare_reduction_arithmetic():
    a = report_page("<html><body>" + "x" * 974 + "</body></html>")  # 1000 bytes
    b = report_page("<html><body>" + "x" * 374 + "</body></html>")  # 400 bytes
    d = compare(a, b)
    assert a.bytes_total == 1000 and b.bytes_total == 400
    assert d.pct("bytes_total") == 60.0


def test_report_json_schema():
    r = report_page(MINIMAL)
    j = r.to_json()
    assert set(j) == {"element_count", "max_dom_depth", "bytes", "external_requests"}
    assert set(j["bytes"]) == {"html", "css", "script"}
    d = compare(r, r).to_json()
    assert "delta" in d and "pct" in d


def test_table_output_aligned():
    r = report_page(MINIMAL)
    table = compare(r, r).to_table()
    lines = table.splitlines()
    assert lines[0].startswith("metric")
    assert len(lines) == 8
