from equipartition_query.utils.trace import build_trace_logger, read_trace


def test_missing_path_disables_tracing():
    tracer = build_trace_logger(None)
    assert not tracer.enabled
    tracer.log("anything", {"x": 1})


def test_records_are_jsonl_with_span_stack(tmp_path):
    path = tmp_path / "nested" / "trace.jsonl"
    tracer = build_trace_logger(path, level="verbose")
    assert tracer.is_verbose
    assert not tracer.is_debug
    with tracer.span("outer"):
        tracer.log("step", {"k": 2})
        tracer.event("hello", message="hi", data={"a": 1})
    tracer.event("done")

    records = read_trace(path)
    assert [r.get("phase") or r.get("name") for r in records] == ["step", "hello", "done"]
    assert records[0]["span"] == ["outer"]
    assert records[1]["message"] == "hi"
    assert records[1]["data"] == {"a": 1}
    assert records[2]["span"] == []


def test_debug_level_records_span_timings(tmp_path):
    path = tmp_path / "trace.jsonl"
    tracer = build_trace_logger(path, level="debug")
    with tracer.span("work", data={"n": 3}):
        pass
    (record,) = read_trace(path)
    assert record["name"] == "span_end"
    assert record["data"]["n"] == 3
    assert record["data"]["elapsed_ms"] >= 0


def test_unknown_level_falls_back_to_pipeline(tmp_path):
    tracer = build_trace_logger(tmp_path / "t.jsonl", level="LOUD")
    assert tracer.level == "pipeline"
