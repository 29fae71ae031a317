"""Tests for the renewal Hawkes toolkit"""
