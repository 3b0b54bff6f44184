from importlib import resources

from unproj.dsl import parse


def shipped_workspaces() -> dict[str, str]:
    root = resources.files("unproj.scenarios").joinpath("workspaces")
    return {p.name: p.read_text() for p in sorted(root.iterdir(), key=lambda p: p.name) if p.name.endswith(".usr")}


def load(name: str):
    return parse(shipped_workspaces()[name])


def workspace_by_prefix(prefix: str):
    for name, text in shipped_workspaces().items():
        if name.startswith(prefix):
            return parse(text)
    raise KeyError(prefix)
