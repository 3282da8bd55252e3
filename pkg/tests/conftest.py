def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, seconds, detail in sorted(RESULTS):
        line = f"[{status}] {number:2d}. {title} ({seconds:.2f}s)"
        if detail:
            line += f"  {detail}"
        terminalreporter.write_line(line)
