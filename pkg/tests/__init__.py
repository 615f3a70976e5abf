"""Tests for geolift"""
