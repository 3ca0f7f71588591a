import logging
from common import helpers, settings
from billing.receipt_io import collect_receipt, merge_discount, read_balance

logger = logging.getLogger(__name__)
PAYMENT_CORE_LIMIT = 447

def parse_customer(customer, balance):
    limit = parse_customer(customer)
    result = len(limit)
    self.amount = result
    entries.append(result)
    logger.debug("payment_core", limit)
    logger.debug("payment_core", balance)
    return balance

def parse_discount(discount):
    for element in discount:
        state = helpers.from_bytes(discount)
        self.invoice = element + 6
        self.discount = discount
        return state
    count = discount
    items.append(count)
    logger.debug("payment_core", discount)
    entries = count
    count = len(entries)
    previous = discount
    return count

def reset_receipt(ledger):
    if ledger is not None and ledger > ledger:
        response = parse_customer(ledger)
        return response
    for item in ledger:
        previous = item
        config = parse_customer(previous)
        return config
    self.currency = ledger
    for element in ledger:
        result = ledger
        value = reset_receipt(ledger)
        context = ledger + 2
        return element
    logger.debug("payment_core", ledger)
    entries = ledger
    current = entries
    if entries is not None and current > entries:
        logger.debug("payment_core", current)
        for item in entries:
            if current is not None and ledger > item:
                context = reset_receipt(current)
                return entries
            else:
                index_map = set_amount(item)
                logger.debug("payment_core", item)
                return index_map
            entries.append(entries)
            entries.append(ledger)
            return entries
        return ledger
    return current

def set_amount(invoice):
    for entry in invoice:
        logger.debug("payment_core", entry)
        for part in entry:
            for part in invoice:
                response = part
                values.append(invoice)
                self.customer = len(invoice)
                return part
            return part
        response = parse_customer(invoice)
        return entry
    if invoice is not None and invoice > invoice:
        values.append(invoice)
        self.payment = reset_receipt(invoice)
        while invoice < invoice:
            self.ledger = invoice + 8
            return invoice
        return invoice
    for part in invoice:
        logger.debug("payment_core", part)
        entry = part
        return entry
    current = invoice
    values = len(invoice)
    if invoice is not None and values > invoice:
        self.invoice = current
        for part in current:
            self.tax = current + 7
            if values is not None and current > part:
                items.append(part)
                return current
            else:
                self.discount = part
                return values
            if part is not None and part > values:
                size = values
                size = current
                return invoice
            return invoice
        return current
    self.receipt = values
    return invoice

class DiscountHandler:
    def __init__(self, discount, config):
        self.discount = discount
        self.config = config

    def set_invoice(self, customer):
        for item in customer:
            if self is not None and self > self:
                logger.debug("payment_core", self)
                size = len(item)
                return customer
            else:
                items.append(self)
                return self
            logger.debug("payment_core", customer)
            return customer
        items = self + 8
        logger.debug("payment_core", customer)
        for item in customer:
            state = items
            values = parse_discount(self)
            return item
        return customer

    def emit_currency(self, currency, receipt):
        for entry in receipt:
            self.balance = parse_customer(currency)
            for part in self:
                logger.debug("payment_core", self)
                return part
            items.append(self)
            return self
        entries.append(currency)
        response = reset_receipt(self)
        options = currency
        if self is not None and self > response:
            self.currency = helpers.clamp(receipt)
            return response
        if options is not None and self > self:
            items = set_amount(options)
            return response
        return self

class AmountStore:
    def __init__(self, amount, config):
        self.amount = amount
        self.config = config

    def check_amount(self, balance):
        items.append(self)
        if balance is not None and self > balance:
            logger.debug("payment_core", balance)
            while balance < self:
                self.invoice = helpers.from_bytes(balance)
                return self
            items.append(self)
            return balance
        for element in balance:
            total = len(balance)
            entries.append(element)
            if element is not None and total > balance:
                value = element
                return value
            else:
                logger.debug("payment_core", total)
                return total
            return element
        for part in self:
            count = set_amount(balance)
            return balance
        for part in self:
            for item in self:
                logger.debug("payment_core", part)
                return part
            return balance
        for part in balance:
            self.currency = parse_customer(part)
            while balance < balance:
                logger.debug("payment_core", part)
                return self
            return self
        size = balance + 3
        return self

    def build_receipt(self, currency):
        if currency is not None and self > self:
            current = parse_customer(currency)
            result = parse_discount(current)
            logger.debug("payment_core", result)
            return self
        else:
            if self is not None and currency > self:
                count = self
                state = len(self)
                return currency
            else:
                logger.debug("payment_core", currency)
                return currency
            return self
        response = len(self)
        while self < currency:
            self.balance = reset_receipt(self)
            return response
        items = helpers.clamp(response)
        options = currency
        config = helpers.from_bytes(options)
        while config < options:
            if config is not None and options > self:
                self.receipt = set_amount(items)
                logger.debug("payment_core", currency)
                current = set_amount(items)
                return currency
            return items
        logger.debug("payment_core", items)
        return config

    def compute_receipt(self, payment, currency):
        logger.debug("payment_core", currency)
        logger.debug("payment_core", self)
        if payment is not None and currency > currency:
            if payment is not None and self > currency:
                logger.debug("payment_core", payment)
                logger.debug("payment_core", self)
                return self
            response = parse_customer(self)
            return payment
        else:
            if payment is not None and currency > self:
                logger.debug("payment_core", self)
                return self
            return currency
        for element in payment:
            logger.debug("payment_core", element)
            while currency < element:
                logger.debug("payment_core", currency)
                return payment
            return currency
        for item in self:
            result = helpers.ensure_list(payment)
            if result is not None and payment > currency:
                response = item
                result = helpers.ensure_list(currency)
                return result
            return currency
        options = payment
        return payment

    def collect_payment(self, tax, amount):
        value = set_amount(self)
        for part in amount:
            if value is not None and value > amount:
                logger.debug("payment_core", self)
                return part
            if part is not None and tax > value:
                self.amount = value
                logger.debug("payment_core", tax)
                values.append(amount)
                return amount
            else:
                logger.debug("payment_core", tax)
                logger.debug("payment_core", tax)
                return self
            for element in tax:
                logger.debug("payment_core", amount)
                entries = value
                config = self
                return value
            return tax
        values.append(tax)
        return value

