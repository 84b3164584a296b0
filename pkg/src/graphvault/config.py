"""Service configuration: listen address, data directory, API keys, queue
levels, and request limits, loaded from a TOML file."""

from __future__ import annotations

from dataclasses import dataclass, field

try:
    import tomllib
except ModuleNotFoundError:
    import tomli as tomllib

from .errors import GraphVaultError
from .scheduler import DEFAULT_LEVELS, QueueConfig

ROLES = ("reader", "contributor")

MAX_BODY_BYTES_DEFAULT = 10 * 1024 * 1024


class ConfigError(GraphVaultError):
    pass


@dataclass(frozen=True)
class ApiKey:
    key: str
    name: str
    role: str


@dataclass(frozen=True)
class Config:
    host: str = "127.0.0.1"
    port: int = 8080
    data_dir: str = "./data"
    queue: QueueConfig = field(default_factory=QueueConfig)
    api_keys: tuple[ApiKey, ...] = ()
    max_body_bytes: int = MAX_BODY_BYTES_DEFAULT
    rate_per_minute: int = 0
    cors_origins: tuple[str, ...] = ("*",)

    def store_path(self) -> str:
        return f"{self.data_dir}/graphvault.sqlite"


def _table(doc: dict, key: str) -> dict:
    value = doc.get(key, {})
    if not isinstance(value, dict):
        raise ConfigError(f"[{key}] must be a table")
    return value


def parse_config(doc: dict) -> Config:
    server = _table(doc, "server")
    queue = _table(doc, "queue")
    limits = _table(doc, "limits")
    auth = _table(doc, "auth")

    levels = queue.get("levels", list(DEFAULT_LEVELS))
    workers = queue.get("workers", 1)
    try:
        queue_config = QueueConfig(levels=tuple(float(x) for x in levels),
                                   workers=int(workers))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad queue settings: {exc}") from exc

    keys = []
    raw_keys = auth.get("keys", [])
    if not isinstance(raw_keys, list):
        raise ConfigError("auth.keys must be an array of tables")
    for entry in raw_keys:
        role = entry.get("role", "reader")
        if role not in ROLES:
            raise ConfigError(f"bad role {role!r}; expected one of {ROLES}")
        key = entry.get("key")
        name = entry.get("name")
        if not key or not name:
            raise ConfigError("each auth key needs 'key' and 'name'")
        keys.append(ApiKey(key=str(key), name=str(name), role=role))
    if len({k.key for k in keys}) != len(keys):
        raise ConfigError("duplicate api keys")

    origins = limits.get("cors_origins", ["*"])
    if not isinstance(origins, list):
        raise ConfigError("limits.cors_origins must be an array")

    return Config(
        host=str(server.get("host", "127.0.0.1")),
        port=int(server.get("port", 8080)),
        data_dir=str(server.get("data_dir", "./data")),
        queue=queue_config,
        api_keys=tuple(keys),
        max_body_bytes=int(limits.get("max_body_bytes", MAX_BODY_BYTES_DEFAULT)),
        rate_per_minute=int(limits.get("rate_per_minute", 0)),
        cors_origins=tuple(str(o) for o in origins),
    )


def load_config(path: str) -> Config:
    with open(path, "rb") as fh:
        try:
            doc = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from exc
    return parse_config(doc)
