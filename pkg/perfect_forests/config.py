"""Configuration management: environment, logging, error reporting and the settings file."""

import logging
import os

from dotenv import load_dotenv
from pydantic_yaml import parse_yaml_raw_as

from perfect_forests import __version__ as package_version
from perfect_forests.exceptions import SettingsError
from perfect_forests.settings_schemas import Settings

log: logging.Logger = logging.getLogger(__name__)

load_dotenv()


def check_required_setting(setting: str) -> None:
    """Check if a required setting is set in the environment."""
    if os.getenv(setting) is None:
        raise TypeError(f"Required setting {setting} is not set")


def set_default_setting(setting: str, default: str) -> None:
    """Set a default value for an environment variable."""
    if setting not in os.environ or os.getenv(setting) == "":
        os.environ[setting] = default


set_default_setting("PF_LOG_LEVEL", "info")
set_default_setting("PF_LOG_HANDLERS", "console")
set_default_setting("PF_LOG_DISCORD_BOT_NAME", "perfect-forests")
set_default_setting("PF_ENVIRONMENT", "development")

log_level_map: dict[str, int] = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
    "critical": logging.CRITICAL,
}


def configure_logging(log_level: str | None = None) -> None:
    """
    Set up console logging, plus Discord logging when PF_LOG_HANDLERS lists it.

    Console output goes to stderr so that stdout only carries JSON.

    Args:
    ----
        log_level (str | None): Overrides PF_LOG_LEVEL when given

    """
    level_name = (log_level or os.getenv("PF_LOG_LEVEL", "info")).lower()
    level = log_level_map.get(level_name, logging.INFO)

    # Always log to the console
    logging.basicConfig(
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        level=level,
        force=True,
    )
    log.debug("Added console logging")

    log_handlers = os.getenv("PF_LOG_HANDLERS", default="console").lower().split(",")
    if "discord" in log_handlers:
        from discord_logging.handler import DiscordHandler

        check_required_setting("PF_LOG_DISCORD_WEBHOOK_URL")

        discord_handler = DiscordHandler(
            service_name=os.getenv("PF_LOG_DISCORD_BOT_NAME", default="perfect-forests"),
            webhook_url=os.getenv("PF_LOG_DISCORD_WEBHOOK_URL", default="anystring"),
        )
        discord_handler.setFormatter(logging.Formatter("%(name)s - %(message)s"))
        discord_handler.setLevel(level)
        logging.getLogger("perfect_forests").addHandler(discord_handler)
        log.debug("Added discord logging")

    configure_sentry(level_name)


def configure_sentry(level_name: str) -> None:
    """Turn on sentry error reporting when PF_SENTRY_DSN is set."""
    sentry_dsn = os.getenv("PF_SENTRY_DSN")
    if sentry_dsn is None:
        return
    import sentry_sdk
    from sentry_sdk.integrations.logging import ignore_logger

    sentry_sdk.init(
        dsn=sentry_dsn,
        release=package_version,
        environment=os.getenv("PF_ENVIRONMENT", "development"),
        debug=level_name == "debug",
    )
    ignore_logger("discord_webhook.webhook")
    log.debug("Sentry reporting enabled")


class AppConfig:
    """Settings for one run, read from an optional YAML file."""

    def __init__(self, settings_file: str | None = None) -> None:
        """
        Create an AppConfig instance.

        Args:
        ----
            settings_file (str | None): YAML settings path; falls back to PF_SETTINGS_FILE

        Raises:
        ------
            SettingsError: If the file cannot be read or does not match the schema

        """
        self.log: logging.Logger = logging.getLogger(
            f"{__name__}.{self.__class__.__name__}"
        )
        self.settings_file: str | None = settings_file or os.getenv("PF_SETTINGS_FILE")
        self.settings: Settings = Settings()
        if self.settings_file:
            self.load_settings(self.settings_file)

    def load_settings(self, path: str) -> None:
        """Replace the current settings with the contents of a YAML file."""
        self.log.info("Loading settings from %s", path)
        try:
            with open(path, encoding="utf-8") as f:
                raw = f.read()
            self.settings = parse_yaml_raw_as(Settings, raw)
        except Exception as e:
            self.log.error("Error loading settings from %s: %s", path, str(e))
            raise SettingsError(f"could not load settings from {path}: {e}") from e
