"""Unit tests for the Logger facade."""

import logging
from unittest.mock import patch

import pytest

from instanton_gluing.utils.logger import Logger


class TestLoggerSetup:
    """Tests for Logger.setup() method."""

    def setup_method(self):
        """Reset logger state before each test."""
        Logger.reset()

    def teardown_method(self):
        Logger.reset()

    def test_setup_creates_logger_with_default_level(self):
        """Test that setup() creates the named logger with INFO level by default."""
        Logger.setup(to_file=False)

        assert Logger._logger is not None
        assert Logger._logger.name == "instanton_gluing"
        assert Logger._logger.level == logging.INFO
        assert Logger._is_setup is True

    def test_setup_creates_logger_with_custom_level(self):
        """Test that setup() accepts the level name in any case."""
        Logger.setup(level="debug", to_file=False)

        assert Logger._logger.level == logging.DEBUG

    def test_setup_console_only(self):
        """Test that to_file=False adds a single console handler."""
        Logger.setup(to_file=False)

        handlers = Logger._logger.handlers
        assert len(handlers) == 1
        assert not isinstance(handlers[0], logging.FileHandler)

    def test_setup_adds_file_handler_when_log_file_specified(self, tmp_path):
        """Test that setup() adds a file handler when log_file is provided."""
        log_file = tmp_path / "run.log"
        Logger.setup(log_file=str(log_file))

        file_handlers = [h for h in Logger._logger.handlers if isinstance(h, logging.FileHandler)]
        assert len(file_handlers) == 1

        Logger.info("missatge de prova")
        for handler in file_handlers:
            handler.flush()
        assert "missatge de prova" in log_file.read_text(encoding="utf-8")

    def test_setup_writes_dated_file_under_logs_folder(self, tmp_path, monkeypatch):
        """Test that the default log file lands in Logs/ under the working directory."""
        monkeypatch.chdir(tmp_path)

        Logger.setup()

        logs = list((tmp_path / "Logs").glob("*.log"))
        assert len(logs) == 1

    def test_setup_only_runs_once(self):
        """Test that setup() only initializes once."""
        Logger.setup(level="DEBUG", to_file=False)
        first_logger = Logger._logger

        Logger.setup(level="ERROR", to_file=False)

        assert Logger._logger is first_logger
        assert Logger._logger.level == logging.DEBUG

    def test_setup_clears_existing_handlers(self):
        """Test that setup() clears existing handlers to avoid duplicates."""
        Logger.setup(to_file=False)
        initial_handler_count = len(Logger._logger.handlers)

        Logger._is_setup = False
        Logger.setup(to_file=False)

        assert len(Logger._logger.handlers) == initial_handler_count

    def test_reset_allows_new_setup(self):
        """Test that reset() removes handlers and allows another setup()."""
        Logger.setup(level="ERROR", to_file=False)
        Logger.reset()

        assert Logger._is_setup is False
        Logger.setup(level="DEBUG", to_file=False)
        assert Logger._logger.level == logging.DEBUG


class TestLoggerMessages:
    """Tests for the level methods."""

    def setup_method(self):
        Logger.reset()

    def teardown_method(self):
        Logger.reset()

    @pytest.mark.parametrize(
        "method, level",
        [
            ("debug", logging.DEBUG),
            ("info", logging.INFO),
            ("warning", logging.WARNING),
        ],
    )
    def test_level_methods_dispatch_to_logger(self, method, level):
        Logger.setup(to_file=False)

        with patch.object(Logger._logger, "log") as mock_log:
            getattr(Logger, method)("Test message")
            mock_log.assert_called_once_with(level, "Test message", exc_info=False)

    def test_error_includes_exception_info_when_requested(self):
        Logger.setup(to_file=False)

        with patch.object(Logger._logger, "log") as mock_log:
            Logger.error("Test error with exception", exc_info=True)
            mock_log.assert_called_once_with(
                logging.ERROR, "Test error with exception", exc_info=True
            )

    def test_debug_is_filtered_at_info_level(self, caplog):
        Logger.setup(to_file=False)

        with caplog.at_level(logging.INFO, logger="instanton_gluing"):
            Logger.debug("detall per arrencada")
            Logger.info("resum de cel·la")

        assert "detall per arrencada" not in caplog.text
        assert "resum de cel·la" in caplog.text

    def test_messages_auto_setup_without_file(self, tmp_path, monkeypatch):
        """Test that a log call before setup() configures a console-only logger."""
        monkeypatch.chdir(tmp_path)
        assert Logger._is_setup is False

        Logger.warning("Test warning")

        assert Logger._is_setup is True
        assert not (tmp_path / "Logs").exists()


class TestLoggerFormatting:
    """Tests for log message formatting."""

    def setup_method(self):
        Logger.reset()

    def teardown_method(self):
        Logger.reset()

    def test_formatter_fields(self):
        """Test that the formatter carries timestamp, name, level and message."""
        Logger.setup(to_file=False)

        formatter = Logger._logger.handlers[0].formatter

        assert formatter.datefmt == "%Y-%m-%d %H:%M:%S"
        for field in ("%(asctime)s", "%(name)s", "%(levelname)s", "%(message)s"):
            assert field in formatter._fmt
