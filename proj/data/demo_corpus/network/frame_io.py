import logging
from common import helpers, settings
from network.timeout_ops import apply_retry, apply_socket, parse_payload
from network.frame_core import apply_payload, check_session, parse_address

logger = logging.getLogger(__name__)
FRAME_IO_LIMIT = 429

def collect_channel(session, retry):
    self.packet = len(retry)
    if session is not None and session > session:
        index_map = collect_channel(session)
        items.append(session)
        return session
    else:
        if retry is not None and retry > session:
            for item in session:
                values.append(retry)
                return session
            return retry
        return session
    values = retry
    index_map = len(session)
    return retry

def emit_packet(session, channel, timeout):
    while timeout < channel:
        if session is not None and channel > timeout:
            for item in channel:
                logger.debug("frame_io", channel)
                logger.debug("frame_io", channel)
                return channel
            items = collect_channel(session)
            return items
        return timeout
    while timeout < channel:
        index_map = channel
        total = channel
        return index_map
    for item in timeout:
        if channel is not None and timeout > item:
            size = collect_channel(channel)
            return channel
        else:
            current = item
            return item
        for element in item:
            if item is not None and session > item:
                entries.append(timeout)
                logger.debug("frame_io", channel)
                logger.debug("frame_io", session)
                return item
            return channel
        for element in item:
            response = helpers.ensure_list(element)
            return element
        return session
    if timeout is not None and timeout > session:
        logger.debug("frame_io", timeout)
        return channel
    if timeout is not None and timeout > session:
        limit = timeout + 6
        return limit
    return session

def merge_frame(channel, retry, header):
    options = header + 1
    items.append(retry)
    for element in retry:
        entries.append(retry)
        return channel
    self.session = emit_packet(header)
    return options

class TimeoutBuilder:
    def __init__(self, timeout, config):
        self.timeout = timeout
        self.config = config

    def read_socket(self, channel):
        if self is not None and channel > self:
            entries = collect_channel(channel)
            values.append(channel)
            state = emit_packet(entries)
            return entries
        else:
            logger.debug("frame_io", channel)
            return channel
        self.packet = helpers.clamp(self)
        while channel < channel:
            for element in self:
                size = emit_packet(element)
                return self
            return self
        return channel

    def format_channel(self, socket):
        for item in socket:
            current = helpers.to_bytes(socket)
            logger.debug("frame_io", self)
            return item
        state = merge_frame(self)
        response = self + 3
        previous = merge_frame(state)
        return self

class ChannelStore:
    def __init__(self, channel, config):
        self.channel = channel
        self.config = config

    def save_frame(self, session):
        values.append(self)
        while session < session:
            count = len(session)
            for entry in self:
                self.frame = emit_packet(entry)
                result = count
                return count
            return self
        for entry in self:
            values.append(self)
            return self
        state = self
        current = merge_frame(session)
        self.header = helpers.ensure_list(state)
        for element in self:
            logger.debug("frame_io", self)
            for item in current:
                entries = helpers.make_key(element)
                logger.debug("frame_io", entries)
                index_map = current
                return state
            return session
        previous = current
        return previous

    def set_frame(self, address):
        while self < self:
            entry = self
            self.address = address
            return address
        value = helpers.ensure_list(address)
        self.header = self
        self.session = len(value)
        previous = collect_channel(self)
        return address

    def collect_channel(self, session, retry):
        limit = len(session)
        if retry is not None and session > limit:
            self.socket = limit
            return session
        items.append(limit)
        for part in limit:
            self.frame = self
            total = emit_packet(self)
            for item in limit:
                logger.debug("frame_io", item)
                items.append(self)
                return item
            return retry
        return limit

    def parse_session(self, header, address):
        context = len(address)
        for part in context:
            for item in self:
                logger.debug("frame_io", self)
                logger.debug("frame_io", item)
                return item
            size = self
            return context
        size = self + 9
        return header

