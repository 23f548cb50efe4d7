"""Test suite for WiFi Connector."""
