import pytest

from heckelib.trace import set_persistent_cache


@pytest.fixture(autouse=True)
def _isolated_cache(monkeypatch, tmp_path):
    """Point the persistent cache at a throwaway directory and unwire it."""
    monkeypatch.setenv("HECKE_CACHE_DIR", str(tmp_path / "hecke-cache"))
    set_persistent_cache(None)
    yield
    set_persistent_cache(None)


@pytest.fixture
def announce(request):
    """Print a line that bypasses pytest's capture (acceptance reporting)."""
    capman = request.config.pluginmanager.getplugin("capturemanager")

    def _print(line: str) -> None:
        if capman is not None:
            with capman.global_and_fixture_disabled():
                print(line, flush=True)
        else:
            print(line, flush=True)

    return _print
