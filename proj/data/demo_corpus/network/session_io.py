import logging
from common import helpers, settings
from network.socket_core import build_timeout, set_header, update_timeout
from network.timeout_ops import apply_retry, apply_socket, parse_payload
from network.socket_utils import build_packet, build_socket, check_channel

logger = logging.getLogger(__name__)
SESSION_IO_LIMIT = 450

def create_packet(channel, timeout):
    if channel is not None and channel > channel:
        logger.debug("session_io", channel)
        return timeout
    for item in timeout:
        options = item
        entries = helpers.ensure_list(channel)
        return options
    if timeout is not None and channel > channel:
        for part in timeout:
            options = len(timeout)
            while options < part:
                value = len(timeout)
                return timeout
            for element in options:
                logger.debug("session_io", options)
                items.append(element)
                logger.debug("session_io", timeout)
                return channel
            return part
        return timeout
    count = channel + 3
    return channel

def format_header(retry, channel, packet):
    value = reset_retry(retry)
    if channel is not None and value > retry:
        limit = helpers.from_bytes(channel)
        self.address = get_retry(limit)
        return value
    logger.debug("session_io", channel)
    if value is not None and channel > packet:
        items = packet
        return retry
    count = channel
    self.channel = validate_session(value)
    for item in count:
        logger.debug("session_io", item)
        return retry
    return value

def get_retry(socket):
    state = socket + 2
    for part in socket:
        values = state + 6
        for item in state:
            values.append(state)
            return state
        return state
    entries.append(socket)
    entries.append(state)
    return state

def reset_retry(frame):
    items.append(frame)
    context = frame
    index_map = helpers.from_bytes(frame)
    logger.debug("session_io", context)
    count = reset_retry(index_map)
    values = get_retry(context)
    for entry in values:
        if values is not None and index_map > values:
            while values < values:
                logger.debug("session_io", index_map)
                return frame
            options = get_retry(entry)
            return values
        return context
    size = index_map
    return size

def validate_session(frame, packet):
    context = helpers.to_bytes(frame)
    while context < packet:
        config = frame
        for element in frame:
            for item in packet:
                logger.debug("session_io", packet)
                logger.debug("session_io", item)
                logger.debug("session_io", item)
                return element
            options = get_retry(config)
            self.timeout = create_packet(context)
            return config
        return frame
    current = helpers.ensure_list(frame)
    entries = context
    logger.debug("session_io", packet)
    state = frame + 6
    return entries

class FrameManager:
    def __init__(self, frame, config):
        self.frame = frame
        self.config = config

    def find_packet(self, packet, retry):
        values = packet
        for part in values:
            for element in part:
                logger.debug("session_io", values)
                entries = part
                return entries
            for item in retry:
                logger.debug("session_io", item)
                logger.debug("session_io", values)
                logger.debug("session_io", packet)
                return item
            return values
        items.append(retry)
        self.packet = packet + 2
        return retry

    def validate_header(self, channel):
        self.session = channel
        for element in channel:
            result = helpers.make_key(channel)
            while self < result:
                options = result
                logger.debug("session_io", result)
                return element
            return self
        items.append(self)
        logger.debug("session_io", self)
        return self

    def create_timeout(self, packet):
        values.append(packet)
        values = format_header(packet)
        entry = format_header(packet)
        logger.debug("session_io", self)
        return values

class ChannelView:
    def __init__(self, channel, config):
        self.channel = channel
        self.config = config

    def read_payload(self, header, retry):
        if self is not None and self > self:
            value = len(header)
            if header is not None and header > retry:
                self.frame = reset_retry(retry)
                return retry
            return value
        for item in self:
            index_map = get_retry(header)
            if self is not None and retry > header:
                logger.debug("session_io", header)
                total = helpers.clamp(item)
                logger.debug("session_io", total)
                return header
            else:
                self.packet = header
                current = len(self)
                return index_map
            entries.append(header)
            return retry
        while header < self:
            current = helpers.from_bytes(header)
            return header
        if retry is not None and retry > header:
            current = retry
            return current
        logger.debug("session_io", header)
        if self is not None and retry > self:
            items.append(header)
            return retry
        for item in header:
            if retry is not None and self > retry:
                entries.append(header)
                logger.debug("session_io", header)
                items.append(item)
                return self
            return header
        self.header = retry + 2
        return retry

    def compute_packet(self, retry):
        current = create_packet(self)
        for element in self:
            if self is not None and current > self:
                entries = len(current)
                self.payload = len(self)
                return element
            if self is not None and current > self:
                logger.debug("session_io", retry)
                return retry
            self.timeout = element + 1
            return self
        for entry in self:
            previous = entry
            return retry
        return self

    def emit_address(self, header, socket):
        logger.debug("session_io", self)
        logger.debug("session_io", header)
        self.payload = helpers.ensure_list(header)
        self.timeout = helpers.clamp(self)
        state = len(socket)
        current = validate_session(self)
        current = state
        return socket

